"""k-paired circulants C(n; a1,b1; ...; ak,bk) and their reduction calculus.

The distance set of C(n; a1,b1; ...; ak,bk) is the union over i of
{d in [n-1] : a_i | d and a_i*b_i does not divide d}; every a_i*b_i must
divide n.  Pair indices in this module are 0-based.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional

from .circulant import Circulant, DistanceSet
from .errors import BadIndex, CapExceeded, EmptySpec, OutOfRange, ParseError, PreconditionViolated
from .numtheory import divisors, gcd_all, lcm_all, primes

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairedSpec:
    n: int
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"order must be positive, got {self.n}")
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))
        for a, b in self.pairs:
            if a < 1 or b < 1:
                raise OutOfRange(f"pair ({a}, {b}) must be positive")
            if self.n % (a * b):
                raise OutOfRange(f"a*b = {a * b} does not divide n = {self.n}")

    @property
    def k(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return format_spec(self)


def spec(n: int, *pairs: Pair) -> PairedSpec:
    """Shorthand: ``spec(12, (2, 2), (3, 2))``."""
    return PairedSpec(n, tuple(pairs))


def block(n: int, a: int, b: int) -> frozenset[int]:
    """Distances d in [1, n-1] with a | d and a*b not dividing d."""
    ab = a * b
    return frozenset(d for d in range(a, n, a) if d % ab)


def paired_distance_set(s: PairedSpec) -> DistanceSet:
    ds: set[int] = set()
    for a, b in s.pairs:
        ds |= block(s.n, a, b)
    return DistanceSet(s.n, tuple(sorted(ds)))


def realize(s: PairedSpec) -> Circulant:
    """The circulant generated by the spec."""
    return Circulant(s.n, paired_distance_set(s))


def paired_lex_product(g: PairedSpec, h: PairedSpec) -> PairedSpec:
    """Spec of G[H]: H's pairs are scaled by |V(G)| and appended."""
    return PairedSpec(g.n * h.n, g.pairs + tuple((g.n * a, b) for a, b in h.pairs))


def lcm_reduce(s: PairedSpec) -> tuple[PairedSpec, int]:
    """(core of order lcm(a_i b_i), blow-up n / lcm); G = core[S_blowup]."""
    if not s.pairs:
        raise EmptySpec("lcm reduction needs at least one pair")
    d = lcm_all(a * b for a, b in s.pairs)
    return PairedSpec(d, s.pairs), s.n // d


def paired_component_count(s: PairedSpec) -> int:
    active = [a for a, b in s.pairs if b > 1]
    return gcd_all(active) if active else s.n


def reduce_connected(s: PairedSpec) -> PairedSpec:
    """Spec of one connected component, C(n/d; a_1/d, b_1; ...).

    Pairs with b = 1 contribute no distances; when d does not divide their
    a they are replaced by (1, 1) so the pair count is preserved.
    """
    d = paired_component_count(s)
    pairs = []
    for a, b in s.pairs:
        if a % d == 0:
            pairs.append((a // d, b))
        else:
            pairs.append((1, 1))
    return PairedSpec(s.n // d, tuple(pairs))


def paired_is_connected(s: PairedSpec) -> bool:
    return paired_component_count(s) == 1


def paired_is_co_connected(s: PairedSpec) -> bool:
    """Distance 1 is missing from D iff every pair with b > 1 has a >= 2.

    Pairs with b = 1 contribute no distances and are ignored.
    """
    return s.n == 1 or all(a >= 2 for a, b in s.pairs if b > 1)


def co_reduce(s: PairedSpec, index: Optional[int] = None) -> tuple[int, PairedSpec]:
    """Split off a complete factor: G = K_b[core] where a_index = 1 and b = b_index.

    ``index`` defaults to the first pair with a = 1 and b > 1.  Every other
    pair (a, b') becomes (a / g, b' * g / gcd(a b', b)) with g = gcd(a, b).
    """
    if index is None:
        index = next((i for i, (a, b) in enumerate(s.pairs) if a == 1 and b > 1), None)
        if index is None:
            raise BadIndex("no pair with a = 1 and b > 1")
    if not 0 <= index < s.k:
        raise BadIndex(f"pair index {index} out of range for k = {s.k}")
    a_l, b_l = s.pairs[index]
    if a_l != 1:
        raise BadIndex(f"pair {index} has a = {a_l}, expected 1")
    pairs = []
    for i, (a, b) in enumerate(s.pairs):
        if i == index:
            continue
        g = math.gcd(a, b_l)
        pairs.append((a // g, b * g // math.gcd(a * b, b_l)))
    return b_l, PairedSpec(s.n // b_l, tuple(pairs))


def is_p4_free_paired(s: PairedSpec) -> bool:
    """Decompose via components / co-components until only C(1; ) remains."""
    while s.n > 1:
        if paired_component_count(s) > 1:
            s = reduce_connected(s)
        elif not paired_is_co_connected(s):
            _, s = co_reduce(s)
        else:
            return False
    return True


# --- recognition ------------------------------------------------------------

def candidate_pairs(n: int, within: frozenset[int]) -> list[tuple[Pair, frozenset[int]]]:
    """All (a, b) with ab | n, b > 1 and a nonempty block contained in ``within``."""
    out = []
    for a in divisors(n):
        for b in divisors(n // a):
            if b == 1:
                continue
            blk = block(n, a, b)
            if blk and blk <= within:
                out.append(((a, b), blk))
    out.sort(key=lambda item: item[0])
    return out


def _covers(cands, target: frozenset[int], k: int) -> Iterator[tuple[Pair, ...]]:
    """Lex-ordered index-increasing choices of exactly k candidates covering target."""
    masks = [sum(1 << d for d in blk) for _, blk in cands]
    goal = sum(1 << d for d in target)
    # suffix union: what candidates i.. can still cover
    suffix = [0] * (len(masks) + 1)
    for i in range(len(masks) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    def rec(start: int, covered: int, left: int, chosen: list[int]):
        missing = goal & ~covered
        if left == 0:
            if not missing:
                yield tuple(cands[i][0] for i in chosen)
            return
        if missing & ~suffix[start]:
            return
        lowest = missing & -missing
        for i in range(start, len(masks) - left + 1):
            # the least uncovered distance must be hit by this or a later pick
            if not (suffix[i] & lowest):
                return
            chosen.append(i)
            yield from rec(i + 1, covered | masks[i], left - 1, chosen)
            chosen.pop()

    yield from rec(0, 0, k, [])


def recognize_paired(g: Circulant, k_max: int) -> Optional[PairedSpec]:
    """A minimum-k spec realising D(G) with k <= k_max, or None.

    Among minimum-k specs the lexicographically least sorted pair list is
    returned.  Exponential in the worst case.
    """
    target = g.dset.as_set
    if not target:
        return PairedSpec(g.n)
    cands = candidate_pairs(g.n, target)
    union = frozenset().union(*(blk for _, blk in cands)) if cands else frozenset()
    if union != target:
        return None
    for k in range(1, k_max + 1):
        found = next(_covers(cands, target, k), None)
        if found is not None:
            return PairedSpec(g.n, found)
    return None


def is_paired_circulant(g: Circulant) -> bool:
    """Whether D(G) is any union of blocks (no bound on k)."""
    target = g.dset.as_set
    cands = candidate_pairs(g.n, target)
    return frozenset().union(*(blk for _, blk in cands)) == target if target else True


def one_paired_distance_sets(n: int) -> Iterator[tuple[Pair, frozenset[int]]]:
    """Every 1-paired distance set of order n, keyed by its (a, b)."""
    for a in divisors(n):
        for b in divisors(n // a):
            yield (a, b), block(n, a, b)


# --- 2-paired formulas --------------------------------------------------------

def _two_pair(s: PairedSpec) -> tuple[int, int, int, int]:
    if s.k != 2:
        raise PreconditionViolated(f"expected a 2-pair spec, got k = {s.k}")
    (a1, b1), (a2, b2) = s.pairs
    return a1, b1, a2, b2


def _require_lcm_order(s: PairedSpec) -> tuple[int, int, int, int]:
    a1, b1, a2, b2 = _two_pair(s)
    if s.n != math.lcm(a1 * b1, a2 * b2):
        raise PreconditionViolated(f"n = {s.n} != lcm(a1 b1, a2 b2) = {math.lcm(a1 * b1, a2 * b2)}")
    return a1, b1, a2, b2


def clique_size_formulas(s: PairedSpec) -> tuple[int, int]:
    """Sizes of maximal a1-cliques and maximal a2-cliques (n = lcm(a1 b1, a2 b2))."""
    a1, b1, a2, b2 = _require_lcm_order(s)
    g = math.gcd(a1 * b1, a2 * b2)
    return b1 * b2 * math.gcd(a2, a1 * b1) // g, b1 * b2 * math.gcd(a1, a2 * b2) // g


def is_cis_2paired(s: PairedSpec) -> bool:
    """CIS test for connected, co-connected 2-pair specs: gcd(a1 b1, a2 b2) == 1."""
    a1, b1, a2, b2 = _two_pair(s)
    if not paired_is_connected(s) or not paired_is_co_connected(s):
        raise PreconditionViolated(f"{format_spec(s)} is not connected and co-connected")
    return math.gcd(a1 * b1, a2 * b2) == 1


def blocking_stable_triple(s: PairedSpec) -> tuple[int, int, int]:
    """A stable triple {0, i, j} no maximal stable superset of which reaches a1*a2.

    Requires a1, a2 > 1, gcd(a1, a2 b2) = gcd(a2, a1 b1) = 1, gcd(b1, b2) > 1 and
    n = lcm(a1 b1, a2 b2).  If a2 < 3 the two pairs are swapped first.
    """
    a1, b1, a2, b2 = _require_lcm_order(s)
    if not (a1 > 1 and a2 > 1):
        raise PreconditionViolated("need a1 > 1 and a2 > 1")
    if math.gcd(a1, a2 * b2) != 1 or math.gcd(a2, a1 * b1) != 1:
        raise PreconditionViolated("need gcd(a1, a2 b2) = gcd(a2, a1 b1) = 1")
    if math.gcd(b1, b2) == 1:
        raise PreconditionViolated("need gcd(b1, b2) > 1")
    if a2 < 3:
        a1, b1, a2, b2 = a2, b2, a1, b1
    n = s.n
    step = a2 * math.gcd(b1, b2)
    mod = a1 * b1
    beta = next(t for t in range(mod) if (2 + t * a2) % mod == 0)
    return 0, (1 + step * a1) % n, (2 + beta * a2) % n


# --- the G_n family -----------------------------------------------------------

GN_MAX = 3


def gn_family(n: int) -> PairedSpec:
    """G_1 = K_2[S_3], G_n = Q_n[G_{n-1}] with Q_n = K_{p_{2n-1}}[S_{p_{2n}}].

    Pairs follow the indexing a_i = q_{i+1} ... q_n, b_i = p_{2i-1}, where
    q_i = p_{2i-1} p_{2i}.  P4-free, n-paired, and not (n-1)-paired.
    """
    if n < 1:
        raise OutOfRange("gn_family needs n >= 1")
    if n > GN_MAX:
        raise CapExceeded(f"gn_family capped at n = {GN_MAX} (order grows as a primorial)")
    ps = list(islice(primes(), 2 * n))
    q = [ps[2 * i] * ps[2 * i + 1] for i in range(n)]
    pairs = []
    for i in range(n):
        a = math.prod(q[i + 1:])
        pairs.append((a, ps[2 * i]))
    return PairedSpec(math.prod(q), tuple(pairs))


# --- text format ------------------------------------------------------------

def format_spec(s: PairedSpec) -> str:
    body = ";".join(f"{a},{b}" for a, b in s.pairs)
    return f"C({s.n};{body})"


_SPEC_RE = re.compile(r"^\s*C\(\s*(\d+)\s*;(.*)\)\s*$")


def parse_spec(text: str) -> PairedSpec:
    """Read 'C(n;a1,b1;...;ak,bk)'; 'C(n;)' and 'C(n;∅)' are the edgeless spec."""
    match = _SPEC_RE.match(text)
    if not match:
        raise ParseError(f"not a paired spec: {text!r}")
    n = int(match.group(1))
    rest = match.group(2).strip()
    pairs = []
    if rest and rest not in ("∅", "0"):
        for chunk in rest.split(";"):
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 2:
                raise ParseError(f"bad pair {chunk!r} in {text!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"bad pair {chunk!r} in {text!r}") from None
    return PairedSpec(n, tuple(pairs))


def two_pair_specs(max_order: int) -> Iterator[PairedSpec]:
    """All ordered 2-pair specs with n = lcm(a1 b1, a2 b2) <= max_order."""
    pairs = sorted((a, m // a) for m in range(1, max_order + 1) for a in divisors(m))
    for p1 in pairs:
        for p2 in pairs:
            n = math.lcm(p1[0] * p1[1], p2[0] * p2[1])
            if n <= max_order:
                yield PairedSpec(n, (p1, p2))
