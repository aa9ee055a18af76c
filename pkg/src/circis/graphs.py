"""General undirected simple graphs over vertices 0..n-1.

Adjacency is stored as one int bitmask per vertex. Everything here is
immutable; operations return new graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from ._bits import iter_bits, to_mask
from .errors import OutOfRange, ParseError


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise OutOfRange(f"adjacency length {len(self.adj)} != vertex count {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise OutOfRange(f"bad neighbour mask for vertex {v}")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise OutOfRange(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise OutOfRange(f"edge ({u}, {v}) invalid for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        return SimpleGraph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph on ``vertices``, relabelled 0..len-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(to_mask(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return SimpleGraph(len(vertices), tuple(rows))

    def relabel(self, mapping: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``mapping[v]`` (a permutation)."""
        return SimpleGraph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def is_stable(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full & ~(1 << v) for v in range(n)))


def edgeless_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def lex_product_graph(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Lexicographic product G[H] with (u, x) flattened to u * |V(H)| + x.

    (u, x) ~ (v, y) iff uv is an edge of G, or u == v and xy is an edge of H.
    """
    m = h.n
    block = (1 << m) - 1
    rows = []
    for u in range(g.n):
        outer = 0
        for v in iter_bits(g.adj[u]):
            outer |= block << (v * m)
        for x in range(m):
            rows.append(outer | (h.adj[x] << (u * m)))
    return SimpleGraph(g.n * m, tuple(rows))


def components(g: SimpleGraph, within: int | None = None) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex.

    ``within`` restricts to the subgraph induced by that mask.
    """
    allowed = g.full_mask if within is None else within
    seen = 0
    comps = []
    for start in iter_bits(allowed):
        if (seen >> start) & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & allowed & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) <= 1


def is_co_connected(g: SimpleGraph) -> bool:
    return is_connected(g.complement())


def is_bipartite_graph(g: SimpleGraph) -> bool:
    """BFS 2-colouring."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """G + H with the vertices of H shifted up by |V(G)|."""
    shift = g.n
    return SimpleGraph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """G + H plus every edge between the two parts."""
    return disjoint_union(g.complement(), h.complement()).complement()


def is_p4_free(g: SimpleGraph) -> bool:
    """Cograph test: every induced piece with 2+ vertices is disconnected or co-disconnected."""
    stack = [g.full_mask]
    co = g.complement()
    while stack:
        mask = stack.pop()
        if mask.bit_count() < 2:
            continue
        parts = components(g, mask)
        if len(parts) == 1:
            parts = components(co, mask)
            if len(parts) == 1:
                return False
        stack.extend(parts)
    return True


P4_BRUTEFORCE_MAX = 12


def has_induced_p4_bruteforce(g: SimpleGraph) -> bool:
    """Look at every 4-subset; only P4 has 3 edges and degrees 1, 1, 2, 2."""
    if g.n > P4_BRUTEFORCE_MAX:
        raise OutOfRange(f"4-subset oracle limited to {P4_BRUTEFORCE_MAX} vertices")
    for quad in combinations(range(g.n), 4):
        mask = to_mask(quad)
        degrees = sorted((g.adj[v] & mask).bit_count() for v in quad)
        if degrees == [1, 1, 2, 2]:
            return True
    return False


# --- text encodings -------------------------------------------------------

def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SimpleGraph:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise ParseError(f"header says {m} edges, found {len(edges)}")
    return SimpleGraph.from_edges(n, edges)


def to_graph6(g: SimpleGraph) -> str:
    import networkx as nx

    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def from_graph6(text: str) -> SimpleGraph:
    import networkx as nx

    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"malformed graph6 string: {exc}") from None
    return SimpleGraph.from_edges(nxg.number_of_nodes(), nxg.edges())


def to_networkx(g: SimpleGraph):
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg
