"""Bit-indexed vertex sets: vertex v is bit v of a Python int."""
from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def rotate(mask: int, shift: int, n: int) -> int:
    """Add ``shift`` (mod n) to every member of ``mask``."""
    shift %= n
    if not shift:
        return mask
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full
