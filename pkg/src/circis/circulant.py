"""Circulant graphs C_n(D) and the arithmetic on their distance sets."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from ._bits import rotate, to_mask
from .errors import NotSymmetric, OrderMismatch, OutOfRange, ParseError
from .graphs import SimpleGraph
from .numtheory import gcd_all, units


@dataclass(frozen=True)
class DistanceSet:
    """Symmetric connection set: ``d in distances`` iff ``order - d in distances``.

    Always stored in full (closed) form, ascending.
    """

    order: int
    distances: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise OutOfRange(f"order must be positive, got {n}")
        ds = self.distances
        if list(ds) != sorted(set(ds)):
            raise OutOfRange("distances must be strictly ascending")
        for d in ds:
            if not 1 <= d <= n - 1:
                raise OutOfRange(f"distance {d} outside [1, {n - 1}]")
        members = set(ds)
        for d in ds:
            if n - d not in members:
                raise NotSymmetric(f"{d} in D but {n - d} missing (n={n})")

    def __contains__(self, d: int) -> bool:
        return d in self.as_set

    def __iter__(self):
        return iter(self.distances)

    def __len__(self) -> int:
        return len(self.distances)

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.distances)


@dataclass(frozen=True)
class Circulant:
    """C_n(D): vertices Z_n, i ~ j iff (i - j) mod n lies in D."""

    n: int
    dset: DistanceSet

    def __post_init__(self):
        if self.dset.order != self.n:
            raise OrderMismatch(f"distance set order {self.dset.order} != {self.n}")

    @property
    def D(self) -> tuple[int, ...]:
        return self.dset.distances

    @cached_property
    def row0(self) -> int:
        """Neighbour mask of vertex 0."""
        return to_mask(self.D)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        return tuple(rotate(self.row0, i, self.n) for i in range(self.n))

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.adjacency)

    def adjacent(self, i: int, j: int) -> bool:
        return (i - j) % self.n in self.dset

    def __str__(self) -> str:
        return format_circulant(self)


def make_circulant(n: int, distances: Iterable[int] = (), *, symmetrize: bool = False) -> Circulant:
    """Validated C_n(D).

    With ``symmetrize=True`` the distances may be given in half form
    (any subset); the closure d -> n - d is added before validation.
    Out-of-range distances are rejected either way.
    """
    if n < 1:
        raise OutOfRange(f"order must be positive, got {n}")
    ds = set(distances)
    for d in ds:
        if not 1 <= d <= n - 1:
            raise OutOfRange(f"distance {d} outside [1, {n - 1}]")
    if symmetrize:
        ds |= {n - d for d in ds}
    return Circulant(n, DistanceSet(n, tuple(sorted(ds))))


def circulant_from_half_mask(n: int, half_mask: int) -> Circulant:
    """Circulant whose distance d in [1, n//2] is present iff bit d-1 is set."""
    ds = set()
    for d in range(1, n // 2 + 1):
        if (half_mask >> (d - 1)) & 1:
            ds.add(d)
            ds.add(n - d)
    return Circulant(n, DistanceSet(n, tuple(sorted(ds))))


def half_mask(g: Circulant) -> int:
    return to_mask(d - 1 for d in g.D if d <= g.n // 2)


def complete_circulant(n: int) -> Circulant:
    return make_circulant(n, range(1, n))


def edgeless_circulant(n: int) -> Circulant:
    return make_circulant(n)


def cycle_circulant(n: int) -> Circulant:
    """C_n({1, n-1}); degenerates to K_2 and K_1 for n = 2, 1."""
    return make_circulant(n, {1, n - 1} if n > 1 else ())


def complement_circulant(g: Circulant) -> Circulant:
    present = g.dset.as_set
    return Circulant(g.n, DistanceSet(g.n, tuple(d for d in range(1, g.n) if d not in present)))


def component_count(g: Circulant) -> int:
    """gcd(D + {n}); 1 iff connected."""
    return gcd_all((*g.D, g.n))


def component_subgraph(g: Circulant) -> Circulant:
    """C_{n/c}(D/c), the circulant every connected component is isomorphic to."""
    c = component_count(g)
    return Circulant(g.n // c, DistanceSet(g.n // c, tuple(d // c for d in g.D)))


def is_connected_circulant(g: Circulant) -> bool:
    return component_count(g) == 1


def is_co_connected_circulant(g: Circulant) -> bool:
    return component_count(complement_circulant(g)) == 1


def is_bipartite(g: Circulant) -> bool:
    comp = component_subgraph(g)
    if comp.n == 1:
        return True
    return comp.n % 2 == 0 and all(d % 2 for d in comp.D)


def lex_product(g: Circulant, h: Circulant) -> Circulant:
    """G[H] as the circulant C_{nm}(T), T = U_j (D + jn) u nF.

    Vertex t of the product stands for the pair (t mod n, t div n): the
    G-coordinate sits in the low digit and the copy of H in the high digit.
    """
    n, m = g.n, h.n
    t = {d + j * n for j in range(m) for d in g.D}
    t.update(n * f for f in h.D)
    return Circulant(n * m, DistanceSet(n * m, tuple(sorted(t))))


def lex_vertex(u: int, x: int, n: int) -> int:
    """Circulant label of the pair (u, x) in lex_product(G, H) with |V(G)| = n."""
    return u + x * n


def cayley_multiplier(g: Circulant, h: Circulant) -> Optional[int]:
    """Least unit q with q*D(G) = D(H) (mod n), or None.

    A None answer proves G and H non-isomorphic only for square-free n.
    """
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    n = g.n
    target = h.dset.as_set
    if len(g.D) != len(target):
        return None
    for q in units(n):
        if {(q * d) % n for d in g.D} == target:
            return q
    return None


def format_circulant(g: Circulant) -> str:
    return f"{g.n}:" + ",".join(str(d) for d in g.D)


def parse_circulant(text: str) -> Circulant:
    """Inverse of :func:`format_circulant` ("n:d1,d2,..." with the full set)."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ParseError(f"expected 'n:d1,d2,...', got {text!r}")
    try:
        n = int(head)
        ds = [int(tok) for tok in tail.split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"non-integer token in {text!r}") from None
    return make_circulant(n, ds)
