"""Maximal clique / stable set enumeration and the gap-sequence view of vertex sets.

Enumeration is Bron-Kerbosch with Tomita pivoting over int bitmasks. The
streams are lazy, so a consumer can stop at the first interesting set.
Emission order is the pivot-tree order and carries no meaning; sort if
you need determinism across versions.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence, Union

from ._bits import iter_bits, to_mask, to_set
from .circulant import Circulant, complement_circulant, component_count, component_subgraph
from .errors import BadGapSum, EmptyGraph, EmptySet
from .graphs import SimpleGraph

Graph = Union[SimpleGraph, Circulant]
GapSequence = tuple[int, ...]


def _adjacency(g: Graph) -> tuple[int, ...]:
    return g.adjacency if isinstance(g, Circulant) else g.adj


def _co_adjacency(g: Graph) -> tuple[int, ...]:
    if isinstance(g, Circulant):
        return complement_circulant(g).adjacency
    return g.complement().adj


# --- core enumeration -------------------------------------------------------

def _bron_kerbosch(adj: Sequence[int], r: int, p: int, x: int) -> Iterator[int]:
    if not p:
        if not x:
            yield r
        return
    # pivot: vertex of P u X with most neighbours in P
    best, pivot_nbrs = -1, 0
    for u in iter_bits(p | x):
        c = (adj[u] & p).bit_count()
        if c > best:
            best, pivot_nbrs = c, adj[u]
    for v in iter_bits(p & ~pivot_nbrs):
        bit = 1 << v
        yield from _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v])
        p &= ~bit
        x |= bit


def maximal_clique_masks(adj: Sequence[int], within: Optional[int] = None) -> Iterator[int]:
    """Masks of the maximal cliques of the graph given by neighbour masks.

    ``within`` restricts to the subgraph induced by that vertex mask.
    """
    p = (1 << len(adj)) - 1 if within is None else within
    if not p:
        return
    yield from _bron_kerbosch(adj, 0, p, 0)


def cliques_through(adj: Sequence[int], v: int) -> Iterator[int]:
    """Masks of the maximal cliques that contain vertex ``v``."""
    yield from _bron_kerbosch(adj, 1 << v, adj[v], 0)


def maximal_cliques(g: Graph) -> Iterator[frozenset[int]]:
    for mask in maximal_clique_masks(_adjacency(g)):
        yield to_set(mask)


def maximal_stable_sets(g: Graph) -> Iterator[frozenset[int]]:
    for mask in maximal_clique_masks(_co_adjacency(g)):
        yield to_set(mask)


# --- sizes ----------------------------------------------------------------

def _colour_order(adj: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of P; vertices listed by colour with their colour number."""
    order: list[int] = []
    colours: list[int] = []
    uncoloured = p
    k = 0
    while uncoloured:
        k += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncoloured &= ~low
            q &= ~low & ~adj[v]
            order.append(v)
            colours.append(k)
    return order, colours


def max_clique_size(adj: Sequence[int], within: Optional[int] = None) -> int:
    """Clique number of the subgraph induced by ``within`` (branch and bound)."""
    p0 = (1 << len(adj)) - 1 if within is None else within
    best = 0

    def expand(p: int, size: int) -> None:
        nonlocal best
        order, colours = _colour_order(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best:
                return
            v = order[i]
            q = p & adj[v]
            if q:
                expand(q, size + 1)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if p0:
        expand(p0, 0)
    return best


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise EmptyGraph("graph has no vertices")


def omega(g: Graph) -> int:
    _require_vertices(g)
    adj = _adjacency(g)
    if isinstance(g, Circulant):
        # every clique rotates onto one through 0
        return 1 + max_clique_size(adj, adj[0])
    return max_clique_size(adj)


def alpha(g: Graph) -> int:
    _require_vertices(g)
    co = _co_adjacency(g)
    if isinstance(g, Circulant):
        return 1 + max_clique_size(co, co[0])
    return max_clique_size(co)


def uniform_clique_size(adj: Sequence[int], through: Optional[int] = None) -> Optional[int]:
    """Common size of all maximal cliques (through vertex ``through`` if given).

    Returns None as soon as two different sizes are seen.
    """
    stream = maximal_clique_masks(adj) if through is None else cliques_through(adj, through)
    size = None
    for mask in stream:
        c = mask.bit_count()
        if size is None:
            size = c
        elif c != size:
            return None
    return size


def _uniform(adj: Sequence[int], circulant: bool) -> bool:
    return uniform_clique_size(adj, 0 if circulant else None) is not None


def is_well_covered(g: Graph) -> bool:
    """All maximal stable sets are maximum."""
    _require_vertices(g)
    return _uniform(_co_adjacency(g), isinstance(g, Circulant))


def is_co_well_covered(g: Graph) -> bool:
    """All maximal cliques are maximum."""
    _require_vertices(g)
    return _uniform(_adjacency(g), isinstance(g, Circulant))


def _sumset(sizes: frozenset[int], copies: int) -> frozenset[int]:
    out = frozenset({0})
    for _ in range(copies):
        out = frozenset(a + b for a in out for b in sizes)
    return out


def size_spectrum(g: Circulant) -> tuple[frozenset[int], frozenset[int]]:
    """(sizes of maximal cliques, sizes of maximal stable sets) of a circulant.

    Disconnected and co-disconnected circulants split into isomorphic
    (co-)components, so only connected, co-connected pieces are enumerated.
    """
    if g.n == 1:
        return frozenset({1}), frozenset({1})
    c = component_count(g)
    if c > 1:
        cs, ss = size_spectrum(component_subgraph(g))
        return cs, _sumset(ss, c)
    co = complement_circulant(g)
    c = component_count(co)
    if c > 1:
        # G is the join of c copies of the complement of one co-component
        ss, cs = size_spectrum(component_subgraph(co))
        return _sumset(cs, c), ss
    cs = frozenset(m.bit_count() for m in cliques_through(g.adjacency, 0))
    ss = frozenset(m.bit_count() for m in cliques_through(co.adjacency, 0))
    return cs, ss


# --- gap sequences --------------------------------------------------------

def gap_sequence(members: Iterable[int], n: int) -> tuple[int, GapSequence]:
    """(least member, successive gaps) of a nonempty subset of Z_n."""
    xs = sorted({x % n for x in members})
    if not xs:
        raise EmptySet("gap sequence of an empty set")
    gaps = [b - a for a, b in zip(xs, xs[1:])]
    gaps.append(xs[0] + n - xs[-1])
    return xs[0], tuple(gaps)


def generate(gaps: Sequence[int], base: int, n: int) -> frozenset[int]:
    """The set {base + d_1 + ... + d_p : 1 <= p <= r} (mod n)."""
    if any(d < 1 for d in gaps) or sum(gaps) != n:
        raise BadGapSum(f"gaps {tuple(gaps)} do not sum to {n}")
    out = []
    pos = base
    for d in gaps:
        pos += d
        out.append(pos % n)
    return frozenset(out)


def canonical_rotation(gaps: Sequence[int]) -> GapSequence:
    """Lexicographically least cyclic rotation."""
    g = tuple(gaps)
    return min(g[i:] + g[:i] for i in range(len(g)))


def canonical_gap_classes(sets: Iterable[Iterable[int]], n: int) -> set[GapSequence]:
    """Rotation classes of vertex subsets of Z_n, each as its least gap rotation."""
    return {canonical_rotation(gap_sequence(s, n)[1]) for s in sets}


def format_gap_class(gaps: Sequence[int]) -> str:
    """'(d1, d2, ...)', written '(d1, ..., dk)^p' when the sequence is p-periodic."""
    g = tuple(gaps)
    r = len(g)
    for period in range(1, r):
        if r % period == 0 and g == g[:period] * (r // period):
            return f"({', '.join(map(str, g[:period]))})^{r // period}"
    return f"({', '.join(map(str, g))})"


def parse_gap_class(text: str) -> GapSequence:
    """Inverse of :func:`format_gap_class`; also accepts '(3)4'-style powers."""
    text = text.strip()
    body, _, power = text.rpartition(")")
    body = body.lstrip("(")
    base = tuple(int(tok) for tok in body.split(",") if tok.strip())
    power = power.lstrip("^").strip()
    return base * (int(power) if power else 1)


def vertex_mask(members: Iterable[int]) -> int:
    return to_mask(members)
