"""CIS checks: exhaustive, circulant fast path, almost-CIS and split partitions."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from ._bits import iter_bits, rotate, to_set
from .circulant import Circulant, complement_circulant
from .enumeration import alpha, cliques_through, maximal_clique_masks, omega
from .errors import EmptyGraph
from .graphs import SimpleGraph

Graph = Union[SimpleGraph, Circulant]
Witness = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class CISReport:
    """Outcome of a CIS check; ``witness`` is a disjoint (maximal clique, maximal stable set)."""

    n: int
    is_cis: bool
    alpha: int
    omega: int
    well_covered: bool
    co_well_covered: bool
    witness: Optional[Witness] = None
    distances: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "D": list(self.distances) if self.distances is not None else None,
            "cis": self.is_cis,
            "alpha": self.alpha,
            "omega": self.omega,
            "wc": self.well_covered,
            "cowc": self.co_well_covered,
            "witness": None
            if self.witness is None
            else {"C": sorted(self.witness[0]), "S": sorted(self.witness[1])},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _as_graph(g: Graph) -> SimpleGraph:
    return g.to_graph() if isinstance(g, Circulant) else g


def is_cis_bruteforce(g: Graph) -> CISReport:
    """Check every (maximal clique, maximal stable set) pair, stopping at a disjoint one."""
    sg = _as_graph(g)
    if sg.n < 1:
        raise EmptyGraph("graph has no vertices")
    cliques = list(maximal_clique_masks(sg.adj))
    stables = list(maximal_clique_masks(sg.complement().adj))
    csizes = {c.bit_count() for c in cliques}
    ssizes = {s.bit_count() for s in stables}
    witness = None
    for s in stables:
        for c in cliques:
            if not c & s:
                witness = (to_set(c), to_set(s))
                break
        if witness:
            break
    return CISReport(
        n=sg.n,
        is_cis=witness is None,
        alpha=max(ssizes),
        omega=max(csizes),
        well_covered=len(ssizes) == 1,
        co_well_covered=len(csizes) == 1,
        witness=witness,
        distances=g.D if isinstance(g, Circulant) else None,
    )


def _rotation_witness(n: int, cliques: list[int], stables: list[int]) -> Optional[tuple[int, int]]:
    # C and S + r are disjoint iff r avoids every difference c - s
    for c in cliques:
        cs = list(iter_bits(c))
        for s in stables:
            blocked = {(x - y) % n for x in cs for y in iter_bits(s)}
            if len(blocked) < n:
                r = next(r for r in range(n) if r not in blocked)
                return c, rotate(s, r, n)
    return None


def is_cis_circulant(g: Circulant) -> CISReport:
    """CIS via the circulant characterisation: both sides well-covered and alpha*omega = n.

    Only maximal cliques / stable sets through vertex 0 are enumerated;
    rotation carries every other one onto these.
    """
    n = g.n
    cliques = list(cliques_through(g.adjacency, 0))
    stables = list(cliques_through(complement_circulant(g).adjacency, 0))
    csizes = {c.bit_count() for c in cliques}
    ssizes = {s.bit_count() for s in stables}
    wc, cowc = len(ssizes) == 1, len(csizes) == 1
    a, w = max(ssizes), max(csizes)
    cis = wc and cowc and a * w == n
    witness = None
    if not cis:
        found = _rotation_witness(n, cliques, stables)
        if found is None:
            raise AssertionError(f"no disjoint pair in non-CIS circulant {g}")
        witness = (to_set(found[0]), to_set(found[1]))
    return CISReport(n, cis, a, w, wc, cowc, witness, g.D)


def is_cis(g: Graph) -> bool:
    if isinstance(g, Circulant):
        return is_cis_circulant(g).is_cis
    return is_cis_bruteforce(g).is_cis


def alpha_omega_bound(g: Circulant) -> bool:
    """alpha * omega <= n, evaluated (never assumed)."""
    return alpha(g) * omega(g) <= g.n


@dataclass(frozen=True)
class AlmostCISReport:
    disjoint_pairs: int
    pair: Optional[Witness]

    @property
    def is_almost_cis(self) -> bool:
        return self.disjoint_pairs == 1


def almost_cis(g: Graph) -> AlmostCISReport:
    """Count disjoint (maximal clique, maximal stable set) pairs."""
    sg = _as_graph(g)
    if sg.n < 1:
        raise EmptyGraph("graph has no vertices")
    cliques = list(maximal_clique_masks(sg.adj))
    count, pair = 0, None
    for s in maximal_clique_masks(sg.complement().adj):
        for c in cliques:
            if not c & s:
                count += 1
                pair = (to_set(c), to_set(s))
    return AlmostCISReport(count, pair if count == 1 else None)


def split_partitions(g: Graph, limit: Optional[int] = None) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Partitions V = C + S with C a clique and S a stable set (either may be empty)."""
    sg = _as_graph(g)
    adj = sg.adj
    out: list[tuple[int, int]] = []

    def assign(v: int, c: int, s: int) -> bool:
        if v == sg.n:
            out.append((c, s))
            return limit is not None and len(out) >= limit
        bit = 1 << v
        if adj[v] & c == c and assign(v + 1, c | bit, s):
            return True
        if not adj[v] & s and assign(v + 1, c, s | bit):
            return True
        return False

    assign(0, 0, 0)
    return [(to_set(c), to_set(s)) for c, s in out]


def is_split_with_unique_partition(g: Graph) -> bool:
    if g.n < 1:
        raise EmptyGraph("graph has no vertices")
    return len(split_partitions(g, limit=2)) == 1
