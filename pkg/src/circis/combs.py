"""Combs, anticombs and settledness; named graphs and CIS extensions.

A k-comb has a stable side v_1..v_k, a clique side v'_1..v'_k and
the matching v_i v'_i as its only cross edges.  An anticomb is the
complement of a comb.  A comb (or anticomb) sitting inside a graph is
settled when some outside vertex sees all of its clique side and none of
its stable side.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Literal

from ._bits import iter_bits, to_mask
from .enumeration import maximal_clique_masks
from .errors import CapExceeded, OutOfRange
from .graphs import SimpleGraph, path_graph

MAX_COMB_K = 4
MAX_COMB_N = 16


def build_comb(k: int) -> SimpleGraph:
    """B_k: vertices 0..k-1 stable side, k..2k-1 clique side, i matched to k+i."""
    if k < 1:
        raise OutOfRange("comb size must be positive")
    edges = [(i, k + i) for i in range(k)]
    edges += [(k + i, k + j) for i, j in combinations(range(k), 2)]
    return SimpleGraph.from_edges(2 * k, edges)


def build_settled_comb(k: int) -> SimpleGraph:
    """D_k: B_k plus vertex 2k adjacent to the whole clique side."""
    comb = build_comb(k)
    edges = list(comb.edges) + [(2 * k, k + i) for i in range(k)]
    return SimpleGraph.from_edges(2 * k + 1, edges)


def build_anticomb(k: int) -> SimpleGraph:
    return build_comb(k).complement()


def build_settled_anticomb(k: int) -> SimpleGraph:
    return build_settled_comb(k).complement()


def bull_graph() -> SimpleGraph:
    """The A-graph: P4 (0-2-3-1) with vertex 4 joined to both midpoints."""
    return build_settled_comb(2)


def p4_graph() -> SimpleGraph:
    return path_graph(4)


HOLZMAN_PAIRS = tuple(combinations(range(5), 2))


def holzman_graph() -> SimpleGraph:
    """Clique on the ten pairs {i, j} of [5] (vertices 0..9, lexicographic),
    stable set on the five points (vertices 10..14), v_ij ~ v_k iff k in {i, j}.
    """
    edges = list(combinations(range(10), 2))
    for idx, (i, j) in enumerate(HOLZMAN_PAIRS):
        edges += [(idx, 10 + i), (idx, 10 + j)]
    return SimpleGraph.from_edges(15, edges)


@dataclass(frozen=True)
class CombEmbedding:
    """An induced comb or anticomb; stable_side[i] is paired with clique_side[i].

    For a comb the pairs are the matching edges; for an anticomb they are
    the only non-edges across the two sides.
    """

    kind: Literal["comb", "anticomb"]
    stable_side: tuple[int, ...]
    clique_side: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.clique_side)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k, "S": list(self.stable_side), "C": list(self.clique_side)}


def violations_to_json(violations: list[CombEmbedding]) -> str:
    return json.dumps([v.to_dict() for v in violations])


def _k_cliques(adj, k: int, candidates: int) -> Iterator[tuple[int, ...]]:
    def rec(chosen: list[int], cand: int):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for v in iter_bits(cand):
            chosen.append(v)
            yield from rec(chosen, cand & adj[v] & ~((1 << (v + 1)) - 1))
            chosen.pop()

    yield from rec([], candidates)


def induced_combs(g: SimpleGraph, k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(stable side, clique side) of every induced k-comb, each listed once.

    Clique sides come out in ascending order; the stable side is matched
    position by position.
    """
    adj = g.adj
    for clique in _k_cliques(adj, k, g.full_mask):
        cmask = to_mask(clique)
        private = []
        for c in clique:
            others = cmask & ~(1 << c)
            private.append([x for x in iter_bits(adj[c] & ~cmask) if not adj[x] & others])
        if any(not p for p in private):
            continue
        for stable in product(*private):
            smask = to_mask(stable)
            if smask.bit_count() == k and g.is_stable(smask):
                yield stable, clique


def _settled(g: SimpleGraph, stable: tuple[int, ...], clique: tuple[int, ...]) -> bool:
    smask, cmask = to_mask(stable), to_mask(clique)
    outside = g.full_mask & ~smask & ~cmask
    for v in iter_bits(outside):
        if g.adj[v] & cmask == cmask and not g.adj[v] & smask:
            return True
    return False


def _check_caps(g: SimpleGraph, k_max: int) -> None:
    if k_max < 2:
        raise OutOfRange("k_max must be at least 2")
    if k_max > MAX_COMB_K or g.n > MAX_COMB_N:
        raise CapExceeded(f"comb search limited to k_max <= {MAX_COMB_K} and n <= {MAX_COMB_N}")


def find_unsettled(g: SimpleGraph, k_max: int) -> list[CombEmbedding]:
    """Induced combs and anticombs with 2 <= k <= k_max lacking a settling vertex.

    Anticombs of G are found as combs of the complement; settling an
    anticomb of G is the same as settling that comb in the complement.
    """
    _check_caps(g, k_max)
    co = g.complement()
    out = []
    for k in range(2, k_max + 1):
        for stable, clique in induced_combs(g, k):
            if not _settled(g, stable, clique):
                out.append(CombEmbedding("comb", stable, clique))
        # a comb of the complement: its stable side is a clique of G and vice versa
        for co_stable, co_clique in induced_combs(co, k):
            if not _settled(co, co_stable, co_clique):
                out.append(CombEmbedding("anticomb", co_clique, co_stable))
    return out


def has_induced_comb(g: SimpleGraph, k: int) -> bool:
    return next(induced_combs(g, k), None) is not None


def chvatal_sufficient(g: SimpleGraph) -> bool:
    """No induced 3-comb, no induced 3-anticomb, and every induced 2-comb settled."""
    if has_induced_comb(g, 3) or has_induced_comb(g.complement(), 3):
        return False
    return all(_settled(g, s, c) for s, c in induced_combs(g, 2))


def simplicial_vertices(g: SimpleGraph) -> int:
    """Mask of vertices whose neighbourhood is a clique."""
    return to_mask(v for v in range(g.n) if g.is_clique(g.adj[v]))


def cis_extension(g: SimpleGraph, economical: bool = False) -> SimpleGraph:
    """Add a pendant simplicial vertex to every maximal clique of G.

    New vertices are numbered from n upward in the order the cliques are
    taken (ascending by sorted member tuple).  In economical mode cliques
    that already hold a simplicial vertex of G are skipped.
    """
    simplicial = simplicial_vertices(g) if economical else 0
    cliques = sorted(maximal_clique_masks(g.adj), key=lambda m: tuple(iter_bits(m))) if g.n else []
    edges = list(g.edges)
    nxt = g.n
    for c in cliques:
        if c & simplicial:
            continue
        edges += [(nxt, v) for v in iter_bits(c)]
        nxt += 1
    return SimpleGraph.from_edges(nxt, edges)
