"""Slow reference implementations shared by the tests.

Nothing here uses the package's enumeration code, so agreement with it is
evidence rather than tautology.
"""
import itertools

from circis.graphs import SimpleGraph

# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_LINES: dict[int, str] = {}


def brute_maximal_cliques(g: SimpleGraph) -> set[frozenset[int]]:
    """All-subsets oracle: cliques with no vertex extending them."""
    cliques = []
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                cliques.append(frozenset(sub))
    out = set()
    for c in cliques:
        if not any(all(g.has_edge(x, v) for v in c) for x in range(g.n) if x not in c):
            out.add(c)
    return out


def brute_cis(g: SimpleGraph) -> bool:
    cliques = brute_maximal_cliques(g)
    stables = brute_maximal_cliques(g.complement())
    return all(c & s for c in cliques for s in stables)


def union_find_components(g: SimpleGraph) -> int:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(g.n)})


def distance_set_by_definition(n: int, pairs) -> list[int]:
    return [d for d in range(1, n) if any(d % a == 0 and d % (a * b) for a, b in pairs)]
