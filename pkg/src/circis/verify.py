"""Named verification suites and the worked-example fixtures.

Each suite runs one family of checks over a bounded search space and
reports, per check, how many instances were examined and the first
counterexample.  Oracles are kept apart on purpose: wherever a fast route
exists (circulant arithmetic, closed formulas), it is compared against an
exhaustive one that does not share code with it.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Optional

from ._bits import iter_bits, to_mask
from .census import is_p4_free_circulant
from .circulant import (
    Circulant,
    DistanceSet,
    circulant_from_half_mask,
    complement_circulant,
    edgeless_circulant,
    lex_product,
    lex_vertex,
    make_circulant,
)
from .cis import (
    almost_cis,
    alpha_omega_bound,
    is_cis,
    is_cis_bruteforce,
    is_cis_circulant,
    is_split_with_unique_partition,
)
from .combs import (
    bull_graph,
    build_comb,
    build_settled_anticomb,
    build_settled_comb,
    chvatal_sufficient,
    cis_extension,
    find_unsettled,
    holzman_graph,
    p4_graph,
)
from .enumeration import (
    canonical_gap_classes,
    canonical_rotation,
    cliques_through,
    maximal_clique_masks,
    parse_gap_class,
    size_spectrum,
)
from .errors import PreconditionViolated, UnknownSuite
from .graphs import (
    SimpleGraph,
    components,
    disjoint_union,
    is_p4_free,
    join,
    lex_product_graph,
)
from .numtheory import divisors, is_squarefree, units
from .paired import (
    PairedSpec,
    blocking_stable_triple,
    clique_size_formulas,
    format_spec,
    gn_family,
    is_cis_2paired,
    is_paired_circulant,
    is_p4_free_paired,
    lcm_reduce,
    one_paired_distance_sets,
    paired_is_co_connected,
    paired_is_connected,
    paired_lex_product,
    realize,
    recognize_paired,
    spec,
    two_pair_specs,
)


@dataclass
class Check:
    name: str
    checked: int = 0
    failures: int = 0
    first: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, what: Callable[[], str] | str = "") -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = what() if callable(what) else what
        return ok

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"; first counterexample: {self.first}" if self.first else ""
        return f"{status} {self.name}: {self.checked} checked, {self.failures} failed{tail}"

    def to_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failures": self.failures, "first": self.first}


@dataclass
class Report:
    suite: str
    bounds: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str) -> Check:
        c = Check(name)
        self.checks.append(c)
        return c

    def get(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        head = f"{'PASS' if self.passed else 'FAIL'} suite {self.suite} {self.bounds}"
        return [head] + ["  " + c.line() for c in self.checks]

    def to_dict(self) -> dict:
        return {"suite": self.suite, "bounds": self.bounds, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


# --- shared helpers -----------------------------------------------------------

def all_circulants(n: int) -> Iterator[Circulant]:
    """Every circulant of order n, one per symmetric distance set."""
    for half in range(1 << (n // 2)):
        yield circulant_from_half_mask(n, half)


def valid_witness(g: SimpleGraph, clique: frozenset[int], stable: frozenset[int]) -> bool:
    """A maximal clique and a maximal stable set that do not meet."""
    c, s = to_mask(clique), to_mask(stable)
    if c & s or not g.is_clique(c) or not g.is_stable(s):
        return False
    outside_c = g.full_mask & ~c
    outside_s = g.full_mask & ~s
    if any(g.adj[v] & c == c for v in iter_bits(outside_c)):
        return False
    return all(g.adj[v] & s for v in iter_bits(outside_s))


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> SimpleGraph:
    p = rng.random() if p is None else p
    return SimpleGraph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_cograph(rng: random.Random, n: int) -> SimpleGraph:
    """Random cograph on n vertices via random unions and joins."""
    if n == 1:
        return SimpleGraph(1, (0,))
    k = rng.randint(1, n - 1)
    left, right = random_cograph(rng, k), random_cograph(rng, n - k)
    return disjoint_union(left, right) if rng.random() < 0.5 else join(left, right)


# --- suites -----------------------------------------------------------------

def suite_circulant_criterion(n_max: int = 18, **_) -> Report:
    """The circulant CIS characterisation against exhaustive pair checking."""
    rep = Report("circulant-criterion", {"n_max": n_max})
    eq = rep.check("circulant test equals brute force")
    fields = rep.check("alpha, omega, wc, cowc agree")
    wit = rep.check("witnesses are disjoint maximal pairs")
    for n in range(1, n_max + 1):
        for g in all_circulants(n):
            fast, slow = is_cis_circulant(g), is_cis_bruteforce(g)
            eq.record(fast.is_cis == slow.is_cis, lambda: f"{g} fast={fast.is_cis} brute={slow.is_cis}")
            same = (fast.alpha, fast.omega, fast.well_covered, fast.co_well_covered) == (
                slow.alpha, slow.omega, slow.well_covered, slow.co_well_covered)
            fields.record(same, lambda: f"{g}")
            if fast.witness is not None:
                wit.record(valid_witness(g.to_graph(), *fast.witness), lambda: f"{g} {fast.witness}")
    return rep


def suite_alpha_omega(n_max: int = 14, **_) -> Report:
    rep = Report("alpha-omega", {"n_max": n_max})
    bound = rep.check("alpha * omega <= n")
    for n in range(1, n_max + 1):
        for g in all_circulants(n):
            bound.record(alpha_omega_bound(g), lambda: f"{g}")
    return rep


def connected_two_pair_specs(max_order: int) -> Iterator[PairedSpec]:
    for s in two_pair_specs(max_order):
        if paired_is_connected(s) and paired_is_co_connected(s):
            yield s


def suite_two_paired(max_order: int = 60, **_) -> Report:
    """gcd(a1 b1, a2 b2) = 1 against brute-force CIS, connected and co-connected specs."""
    rep = Report("two-paired", {"max_order": max_order})
    chk = rep.check("brute-force CIS equals gcd(a1 b1, a2 b2) == 1")
    cache: dict[tuple[int, tuple[int, ...]], bool] = {}
    for s in connected_two_pair_specs(max_order):
        g = realize(s)
        key = (g.n, g.D)
        if key not in cache:
            cache[key] = is_cis_bruteforce(g).is_cis
        want = is_cis_2paired(s)
        chk.record(cache[key] == want, lambda: f"{format_spec(s)} brute={cache[key]} formula={want}")
    rep.bounds["distinct_graphs"] = len(cache)
    return rep


def _mixed_clique_exists(g: Circulant, a1: int, a2: int) -> bool:
    """Some clique is neither an a1-clique nor an a2-clique.

    Cliques may be rotated to contain 0; such a clique fails both
    properties iff it holds some j with a1 not dividing j and some k
    (possibly k = j) with a2 not dividing k, so a triangle {0, j, k} or an
    edge {0, j} suffices.
    """
    row0 = g.row0
    adj = g.adjacency
    for j in iter_bits(row0):
        if j % a1 == 0:
            continue
        if j % a2:
            return True
        if any(k % a2 for k in iter_bits(row0 & adj[j])):
            return True
    return False


def _sub_circulant(g: Circulant, a: int) -> Circulant:
    """G induced on the multiples of a, relabelled by division."""
    m = g.n // a
    return Circulant(m, DistanceSet(m, tuple(d // a for d in g.D if d % a == 0)))


def _blocking_triple_ok(g: Circulant, triple: tuple[int, int, int], limit: int) -> tuple[bool, str]:
    co = complement_circulant(g).adjacency
    t = to_mask(triple)
    if t.bit_count() != 3 or not all(not (g.adjacency[v] & t) for v in triple):
        return False, f"triple {triple} is not a stable 3-set"
    common = co[triple[0]] & co[triple[1]] & co[triple[2]]
    biggest = 3
    for m in maximal_clique_masks(co, common) if common else ():
        biggest = max(biggest, 3 + m.bit_count())
    return biggest < limit, f"triple {triple} extends to a stable set of size {biggest} >= {limit}"


def blocking_triple_specs(max_order: int) -> Iterator[PairedSpec]:
    """2-pair specs meeting the preconditions of the blocking stable triple."""
    for s in two_pair_specs(max_order):
        try:
            blocking_stable_triple(s)
        except PreconditionViolated:
            continue
        yield s


def suite_clique_formulas(max_order: int = 48, **_) -> Report:
    """Clique/stable-set size formulas for 2-pair specs with n = lcm(a1 b1, a2 b2)."""
    rep = Report("clique-formulas", {"max_order": max_order})
    mixed = rep.check("every clique is an a1-clique or an a2-clique")
    sizes = rep.check("maximal a_i-cliques have the formula sizes")
    spectrum = rep.check("maximal clique sizes lie in {f1, f2}")
    cowc = rep.check("co-well-covered iff gcd(a2, a1 b1) == gcd(a1, a2 b2) (connected, co-connected)")
    bound = rep.check("maximal stable sets have size <= a1 a2")
    wc = rep.check("gcd(a1 b1, a2 b2) == 1 implies all maximal stable sets have size a1 a2")
    triple = rep.check("blocking triple is stable and caps stable supersets below a1 a2")
    seen: dict[tuple[int, tuple[int, ...]], tuple[frozenset[int], frozenset[int]]] = {}
    for s in two_pair_specs(max_order):
        (a1, b1), (a2, b2) = s.pairs
        g = realize(s)
        key = (g.n, g.D)
        if key not in seen:
            seen[key] = size_spectrum(g)
        cs, ss = seen[key]
        f1, f2 = clique_size_formulas(s)
        tag = format_spec(s)
        mixed.record(not _mixed_clique_exists(g, a1, a2), tag)
        sub1 = size_spectrum(_sub_circulant(g, a1))[0]
        sub2 = size_spectrum(_sub_circulant(g, a2))[0]
        sizes.record(sub1 == {f1} and sub2 == {f2}, lambda: f"{tag}: got {sorted(sub1)}, {sorted(sub2)} want {f1}, {f2}")
        spectrum.record(cs <= {f1, f2}, lambda: f"{tag}: clique sizes {sorted(cs)} vs {f1}, {f2}")
        if paired_is_connected(s) and paired_is_co_connected(s):
            want = math.gcd(a2, a1 * b1) == math.gcd(a1, a2 * b2)
            cowc.record((len(cs) == 1) == want, lambda: f"{tag}: clique sizes {sorted(cs)}")
        bound.record(max(ss) <= a1 * a2, lambda: f"{tag}: stable sizes {sorted(ss)}")
        if math.gcd(a1 * b1, a2 * b2) == 1:
            wc.record(ss == {a1 * a2}, lambda: f"{tag}: stable sizes {sorted(ss)}")
    for s in blocking_triple_specs(max_order):
        (a1, _), (a2, _) = s.pairs
        ok, why = _blocking_triple_ok(realize(s), blocking_stable_triple(s), a1 * a2)
        triple.record(ok, lambda: f"{format_spec(s)}: {why}")
    rep.bounds["distinct_graphs"] = len(seen)
    return rep


def suite_lex_product(max_order: int = 24, **_) -> Report:
    """Lexicographic products of circulants: labels, complements, paired specs, CIS."""
    rep = Report("lex-product", {"max_order": max_order})
    label = rep.check("circulant product matches the graph product under (u, x) -> u + x n")
    compl = rep.check("complement of G[H] is co-G[co-H]")
    cis = rep.check("G[H] is CIS iff G and H are")
    for n in range(1, max_order + 1):
        for m in range(1, max_order // n + 1):
            hs = list(all_circulants(m))
            for g in all_circulants(n):
                gs = g.to_graph()
                for h in hs:
                    p = lex_product(g, h)
                    flat = lex_product_graph(gs, h.to_graph())
                    # graph product vertex u * m + x is circulant vertex u + x * n
                    mapping = [lex_vertex(v // m, v % m, n) for v in range(n * m)]
                    label.record(flat.relabel(mapping) == p.to_graph(), lambda: f"{g} [{h}]")
                    compl.record(complement_circulant(p) == lex_product(complement_circulant(g), complement_circulant(h)),
                                 lambda: f"{g} [{h}]")
                    if n > 1 and m > 1:
                        cis.record(is_cis(p) == (is_cis(g) and is_cis(h)), lambda: f"{g} [{h}]")
    spec_chk = rep.check("paired lex product realises the circulant lex product")
    lcm_chk = rep.check("lcm reduction: G = core[S_m]")
    specs = [s for s in two_pair_specs(12)] + [PairedSpec(n, ((a, b),)) for n in range(1, 13) for a in divisors(n)
                                               for b in divisors(n // a)]
    for s in specs:
        core, mult = lcm_reduce(s)
        lcm_chk.record(realize(s) == lex_product(realize(core), edgeless_circulant(mult)), format_spec(s))
    for s, t in combinations(specs[::7], 2):
        if s.n * t.n <= 144:
            spec_chk.record(realize(paired_lex_product(s, t)) == lex_product(realize(s), realize(t)),
                            f"{format_spec(s)} [{format_spec(t)}]")
    return rep


def suite_p4_free(max_order: int = 30, recognize_order: int = 24, **_) -> Report:
    """P4-free paired circulants: 1-paired specs, recognition, and the G_2 graph."""
    rep = Report("p4-free", {"max_order": max_order, "recognize_order": recognize_order})
    one_free = rep.check("1-paired circulants are P4-free")
    one_cis = rep.check("1-paired circulants are CIS")
    recog = rep.check("P4-free circulants are paired")
    arith = rep.check("arithmetic P4-free test equals the graph test")
    for n in range(1, max_order + 1):
        for (a, b), blk in one_paired_distance_sets(n):
            g = make_circulant(n, blk)
            sg = g.to_graph()
            one_free.record(is_p4_free(sg), lambda: format_spec(PairedSpec(n, ((a, b),))))
            one_cis.record(is_cis_bruteforce(sg).is_cis, lambda: format_spec(PairedSpec(n, ((a, b),))))
    for n in range(1, recognize_order + 1):
        for g in all_circulants(n):
            free = is_p4_free_circulant(g)
            if n <= 16:
                arith.record(free == is_p4_free(g.to_graph()), lambda: f"{g}")
            if free:
                recog.record(is_paired_circulant(g), lambda: f"{g}")
    paired_chk = rep.check("paired P4-free reduction equals the graph test")
    for s in two_pair_specs(24):
        paired_chk.record(is_p4_free_paired(s) == is_p4_free(realize(s).to_graph()), format_spec(s))

    g2 = gn_family(2)
    gg = realize(g2)
    rep.check("G_2 is P4-free").record(is_p4_free(gg.to_graph()), format_spec(g2))
    two = recognize_paired(gg, 2)
    rep.check("G_2 is 2-paired").record(two is not None and two.k == 2 and realize(two) == gg, format_spec(g2))
    not_one = rep.check("G_2 is not isomorphic to any 1-paired circulant (Cayley multipliers, n square-free)")
    target = gg.dset.as_set
    not_one.record(is_squarefree(gg.n), f"order {gg.n} not square-free")
    for (a, b), blk in one_paired_distance_sets(gg.n):
        hit = next((q for q in units(gg.n) if {(q * d) % gg.n for d in blk} == target), None)
        not_one.record(hit is None, f"C({gg.n};{a},{b}) maps onto G_2 via q = {hit}")
    return rep


def suite_general_graphs(k_max: int = 4, comb_k: int = 5, samples: int = 200, split_n: int = 6,
                   chvatal_samples: int = 500, seed: int = 0, **_) -> Report:
    rep = Report("general-graphs", {"k_max": k_max, "comb_k": comb_k, "samples": samples, "split_n": split_n, "seed": seed})
    rng = random.Random(seed)
    h = holzman_graph()
    rep.check("Holzman graph: every comb and anticomb settled").record(
        not find_unsettled(h, k_max), "unsettled embeddings exist")
    rep.check("Holzman graph is not CIS").record(not is_cis_bruteforce(h).is_cis, "reported CIS")
    rep.check("bull graph is CIS").record(is_cis_bruteforce(bull_graph()).is_cis, "bull reported non-CIS")
    p4 = is_cis_bruteforce(p4_graph())
    mids, ends = frozenset({1, 2}), frozenset({0, 3})
    rep.check("P4 is not CIS, witness midpoints vs endpoints").record(
        not p4.is_cis and p4.witness == (mids, ends), f"{p4.witness}")
    edges = rep.check("|E(B_k)| = k(k+1)/2")
    for k in range(1, 9):
        edges.record(build_comb(k).m == k * (k + 1) // 2, f"k={k}")
    settled = rep.check("settled combs and anticombs are CIS")
    for k in range(1, comb_k + 1):
        settled.record(is_cis_bruteforce(build_settled_comb(k)).is_cis, f"settled comb k={k}")
        settled.record(is_cis_bruteforce(build_settled_anticomb(k)).is_cis, f"settled anticomb k={k}")
    ext = rep.check("CIS extensions are CIS and contain G induced")
    for _ in range(samples):
        g = random_graph(rng, rng.randint(1, 7))
        for economical in (False, True):
            e = cis_extension(g, economical)
            ok = e.induced(list(range(g.n))) == g and is_cis_bruteforce(e).is_cis
            ext.record(ok, lambda: f"{sorted(g.edges)} economical={economical}")
    chv = rep.check("Chvatal condition implies CIS")
    for _ in range(chvatal_samples):
        g = random_graph(rng, rng.randint(1, 9))
        if chvatal_sufficient(g):
            chv.record(is_cis_bruteforce(g).is_cis, lambda: f"{sorted(g.edges)}")
    split = rep.check("almost CIS iff split with a unique split partition")
    for n in range(1, split_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            g = SimpleGraph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])
            split.record(almost_cis(g).is_almost_cis == is_split_with_unique_partition(g),
                         lambda: f"n={n} {sorted(g.edges)}")
    return rep


def suite_closure(samples: int = 500, lex_samples: int = 200, seed: int = 0, **_) -> Report:
    """CIS under complements, lexicographic products and components; cographs."""
    rep = Report("closure", {"samples": samples, "lex_samples": lex_samples, "seed": seed})
    rng = random.Random(seed)
    comp = rep.check("CIS is closed under complement")
    for _ in range(samples):
        g = random_graph(rng, rng.randint(1, 9))
        comp.record(is_cis(g) == is_cis(g.complement()), lambda: f"{sorted(g.edges)}")
    lex = rep.check("G[H] is CIS iff G and H are")
    for _ in range(lex_samples):
        n = rng.randint(1, 6)
        m = rng.randint(1, 24 // n)
        g, h = random_graph(rng, n), random_graph(rng, m)
        lex.record(is_cis(lex_product_graph(g, h)) == (is_cis(g) and is_cis(h)),
                   lambda: f"G={sorted(g.edges)} H={sorted(h.edges)}")
    parts = rep.check("a graph is CIS iff every component is")
    for _ in range(lex_samples):
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 5))
        u = disjoint_union(g, h)
        each = all(is_cis(u.induced(list(iter_bits(c)))) for c in components(u))
        parts.record(is_cis(u) == each, lambda: f"{sorted(u.edges)}")
    cog = rep.check("P4-free graphs are CIS")
    for _ in range(samples):
        g = random_cograph(rng, rng.randint(1, 10))
        cog.record(is_p4_free(g) and is_cis(g), lambda: f"{sorted(g.edges)}")
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "circulant-criterion": suite_circulant_criterion,
    "alpha-omega": suite_alpha_omega,
    "two-paired": suite_two_paired,
    "clique-formulas": suite_clique_formulas,
    "lex-product": suite_lex_product,
    "p4-free": suite_p4_free,
    "general-graphs": suite_general_graphs,
    "closure": suite_closure,
}

# the command-line --order flag sets this bound of each suite
ORDER_BOUND = {
    "circulant-criterion": "n_max",
    "alpha-omega": "n_max",
    "two-paired": "max_order",
    "clique-formulas": "max_order",
    "lex-product": "max_order",
    "p4-free": "max_order",
}


def verify(name: str, **bounds) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(**bounds)


# --- worked examples ------------------------------------------------------------

@dataclass(frozen=True)
class Example:
    """One printed worked example: its spec and the sets as printed."""

    label: str
    spec: PairedSpec
    printed_blocks: tuple[tuple[int, ...], ...]
    printed_union: tuple[int, ...]
    clique_classes: tuple[str, ...]
    stable_classes: tuple[str, ...]
    clique_sizes: frozenset[int]
    stable_sizes: frozenset[int]


EXAMPLES = (
    Example(
        "C(12;2,2;3,2)", spec(12, (2, 2), (3, 2)),
        ((2, 6, 10), (3, 9)),
        (2, 3, 6, 9, 10),
        ("(2, 10)", "(3)^4"),
        ("(1, 4, 7)", "(1, 7, 4)", "(4)^3"),
        frozenset({2, 4}), frozenset({3}),
    ),
    Example(
        "C(36;2,2;3,3)", spec(36, (2, 2), (3, 3)),
        ((2, 6, 10, 14, 18, 22, 26, 30, 34), (3, 6, 12, 15, 21, 24, 30, 33)),
        (2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34),
        ("(2, 10)^3", "(3, 3, 12)^2", "(6)^6"),
        ("(1, 4, 4, 19, 4, 4)", "(1, 7, 1, 8, 11, 8)", "(4, 5, 4, 7, 9, 7)"),
        frozenset({6}), frozenset({6}),
    ),
    Example(
        "C(60;2,2;3,5)", spec(60, (2, 2), (3, 5)),
        ((2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50, 54, 58),
         (3, 6, 12, 15, 21, 24, 30, 33, 39, 42, 48, 51, 57)),
        (2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34, 38, 39, 42, 46, 48, 50, 51, 54, 57, 58),
        ("(2, 10)^5", "(3, 3, 3, 3, 18)^2", "(3, 3, 6, 12, 6)^2", "(3, 6, 3, 9, 9)^2", "(6)^10"),
        ("(1, 4, 11, 4, 25, 15)", "(1, 7, 8, 29, 8, 7)", "(1, 15, 1, 15, 13, 15)", "(1, 15, 25, 4, 11, 4)",
         "(4, 4, 7, 4, 4, 37)", "(4, 11, 4, 13, 15, 13)", "(5, 8, 7, 8, 17, 15)", "(5, 15)^3",
         "(5, 15, 17, 8, 7, 8)"),
        frozenset({10}), frozenset({6}),
    ),
    Example(
        "C(60;2,2;5,3)", spec(60, (2, 2), (5, 3)),
        ((2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50, 54, 58), (5, 10, 20, 25, 35, 40, 50, 55)),
        (2, 5, 6, 10, 14, 18, 20, 22, 25, 26, 30, 34, 35, 38, 40, 42, 46, 50, 55, 54, 58),
        ("(2, 18)^3", "(5, 5, 20)^2", "(6, 14)^3", "(10)^6"),
        ("(1, 3, 4, 4, 4, 29, 4, 4, 4, 3)", "(1, 3, 4, 8, 1, 15, 13, 4, 4, 7)", "(1, 3, 4, 8, 21, 8, 4, 3, 1, 7)",
         "(1, 3, 8, 1, 3, 12, 17, 4, 8, 3)", "(1, 3, 8, 4, 17, 12, 3, 1, 8, 3)", "(1, 3, 9, 3, 1, 11, 4, 13, 4, 11)",
         "(1, 3, 9, 3, 12, 9, 8, 4, 3, 8)", "(1, 3, 12, 1, 15, 1, 12, 3, 1, 11)", "(1, 7, 1, 7, 1, 7, 8, 13, 8, 7)",
         "(1, 7, 4, 4, 13, 15, 1, 8, 4, 3)", "(1, 7, 8, 1, 12, 3, 12, 1, 8, 7)", "(1, 8, 3, 4, 8, 9, 12, 3, 9, 3)",
         "(1, 8, 4, 3, 8, 4, 9, 8, 7, 8)", "(1, 8, 7, 8, 9, 4, 8, 3, 4, 8)", "(3, 4, 4, 4, 9, 15, 9, 4, 4, 4)",
         "(4, 4, 7, 4, 4, 9, 4, 11, 4, 9)", "(3, 9)^5"),
        frozenset({6}), frozenset({10}),
    ),
)

LEX_EXAMPLE = (spec(36, (2, 2), (3, 3)), spec(1296, (2, 2), (3, 3), (72, 2), (108, 3)))


def _classes_through_zero(adj, n: int) -> set[tuple[int, ...]]:
    return canonical_gap_classes((list(iter_bits(m)) for m in cliques_through(adj, 0)), n)


def fixtures() -> Report:
    """Reproduce every claim of the printed worked examples.

    The printed sets are compared verbatim (as sorted lists); a mismatch
    there is reported, not corrected.  Gap classes are compared after
    rotating each sequence to its least rotation.
    """
    rep = Report("fixtures")
    for ex in EXAMPLES:
        g = realize(ex.spec)
        n = g.n
        blocks = [sorted(d for d in g.D if d % a == 0 and d % (a * b)) for a, b in ex.spec.pairs]
        printed_blocks = [sorted(b) for b in ex.printed_blocks]
        rep.check(f"{ex.label} blocks D_i equal the printed lists").record(
            blocks == printed_blocks, lambda: f"{format_spec(ex.spec)}: computed {blocks}")
        rep.check(f"{ex.label} distance set equals the printed list").record(
            list(g.D) == sorted(ex.printed_union), lambda: f"{format_spec(ex.spec)}: computed {list(g.D)}")
        cliques = _classes_through_zero(g.adjacency, n)
        stables = _classes_through_zero(complement_circulant(g).adjacency, n)
        want_c = {canonical_rotation(parse_gap_class(t)) for t in ex.clique_classes}
        want_s = {canonical_rotation(parse_gap_class(t)) for t in ex.stable_classes}
        rep.check(f"{ex.label} maximal clique gap classes").record(
            cliques == want_c, lambda: f"computed {sorted(cliques)}")
        rep.check(f"{ex.label} maximal stable set gap classes").record(
            stables == want_s, lambda: f"computed {sorted(stables)}")
        cs, ss = size_spectrum(g)
        rep.check(f"{ex.label} clique and stable set sizes").record(
            (cs, ss) == (ex.clique_sizes, ex.stable_sizes), lambda: f"computed {sorted(cs)} / {sorted(ss)}")
    h, product = LEX_EXAMPLE
    lex = rep.check("H[H] for H = C(36;2,2;3,3) is the printed 4-pair spec")
    lex.record(paired_lex_product(h, h) == product, lambda: format_spec(paired_lex_product(h, h)))
    lex.record(realize(product) == lex_product(realize(h), realize(h)), "distance sets differ")
    return rep

