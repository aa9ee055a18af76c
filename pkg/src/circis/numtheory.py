"""Small integer helpers: divisors, gcd/lcm over collections, primes."""
from __future__ import annotations

import math
from functools import lru_cache, reduce
from typing import Iterable, Iterator


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in ascending order."""
    if n < 1:
        raise ValueError(f"divisors of non-positive integer {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def units(n: int) -> list[int]:
    """Residues q in [1, n-1] coprime to n (all of [1] for n = 1)."""
    if n == 1:
        return [1]
    return [q for q in range(1, n) if math.gcd(q, n) == 1]


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def primes() -> Iterator[int]:
    """Ascending primes 2, 3, 5, ... (trial division, fine for the handful we need)."""
    found: list[int] = []
    candidate = 2
    while True:
        if all(candidate % p for p in found if p * p <= candidate):
            found.append(candidate)
            yield candidate
        candidate += 1
