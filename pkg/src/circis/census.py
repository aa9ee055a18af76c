"""Exhaustive census of small circulants.

Every symmetric distance set of order n is determined by its half
[1, n//2], so order n has 2^(n//2) candidates, indexed by a half mask
(bit d-1 set iff d in D).  Candidates are processed in blocks of 2^16
consecutive half masks; a block is the unit of parallel work and of
checkpointing.  Output is sorted by (n, D) whatever the scheduling.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ._bits import rotate
from .circulant import Circulant, DistanceSet, complement_circulant, component_count, component_subgraph
from .enumeration import size_spectrum, uniform_clique_size
from .errors import CapExceeded, CircisError, OutOfRange, ParseError
from .numtheory import is_squarefree, units
from .paired import format_spec, recognize_paired

CENSUS_CAP = 40
BLOCK_BITS = 16
DEFAULT_K_MAX = 2

FILTERS = (
    "connected",
    "co-connected",
    "cis",
    "non-cis",
    "p4-free",
    "non-p4-free",
    "well-covered",
    "co-well-covered",
)


@dataclass(frozen=True)
class CensusRecord:
    n: int
    D: tuple[int, ...]
    connected: bool
    co_connected: bool
    p4_free: bool
    cis: bool
    well_covered: bool
    co_well_covered: bool
    alpha: int
    omega: int
    paired: Optional[str]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "D": list(self.D),
            "connected": self.connected,
            "co_connected": self.co_connected,
            "p4_free": self.p4_free,
            "cis": self.cis,
            "wc": self.well_covered,
            "cowc": self.co_well_covered,
            "alpha": self.alpha,
            "omega": self.omega,
            "paired": self.paired,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        return cls(
            d["n"], tuple(d["D"]), d["connected"], d["co_connected"], d["p4_free"], d["cis"],
            d["wc"], d["cowc"], d["alpha"], d["omega"], d["paired"],
        )

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return self.n, self.D


# --- cheap arithmetic -------------------------------------------------------

def _full_distances(n: int, half: int) -> tuple[int, ...]:
    ds = set()
    for d in range(1, n // 2 + 1):
        if (half >> (d - 1)) & 1:
            ds.add(d)
            ds.add(n - d)
    return tuple(sorted(ds))


def _half_gcd(n: int, half: int) -> int:
    # gcd(d, n) = gcd(n - d, n), so the half determines the component count
    g = n
    d = 1
    while half:
        if half & 1:
            g = math.gcd(g, d)
        half >>= 1
        d += 1
    return g


def is_p4_free_circulant(g: Circulant) -> bool:
    """Cograph test by splitting into (isomorphic) components or co-components."""
    while g.n > 1:
        if component_count(g) > 1:
            g = component_subgraph(g)
            continue
        co = complement_circulant(g)
        if component_count(co) > 1:
            g = complement_circulant(component_subgraph(co))
            continue
        return False
    return True


def _greedy_size(n: int, row0: int, order: Iterable[int]) -> int:
    """Size of the maximal clique through 0 built greedily along ``order``."""
    cand = row0
    size = 1
    for v in order:
        if (cand >> v) & 1:
            size += 1
            cand &= rotate(row0, v, n)
            if not cand:
                break
    return size


def _orders(n: int) -> list[list[int]]:
    qs = [q for q in units(n) if q <= n // 2][:3] or [1]
    out = [[(q * i) % n for i in range(1, n)] for q in qs]
    out.append(list(range(n - 1, 0, -1)))
    return out


def cis_screen(n: int, row0: int, co_row0: int, orders: Optional[list[list[int]]] = None) -> bool:
    """Necessary condition for CIS: greedy maximal cliques and stable sets
    found along several vertex orders all have sizes c, s with c * s = n.
    """
    orders = orders or _orders(n)
    c0 = s0 = None
    for order in orders:
        c = _greedy_size(n, row0, order)
        s = _greedy_size(n, co_row0, order)
        if c * s != n or (c0 is not None and (c, s) != (c0, s0)):
            return False
        c0, s0 = c, s
    return True


def is_cis_fast(g: Circulant) -> bool:
    """Both sides well-covered with alpha*omega = n, exiting at the first odd size; sets through 0 only."""
    co = complement_circulant(g)
    w = uniform_clique_size(g.adjacency, 0)
    if w is None or g.n % w:
        return False
    a = uniform_clique_size(co.adjacency, 0)
    return a is not None and a * w == g.n


# --- records ------------------------------------------------------------------

def make_record(g: Circulant, k_max: int = DEFAULT_K_MAX) -> CensusRecord:
    cs, ss = size_spectrum(g)
    wc, cowc = len(ss) == 1, len(cs) == 1
    a, w = max(ss), max(cs)
    spec = recognize_paired(g, k_max) if k_max > 0 else None
    return CensusRecord(
        n=g.n,
        D=g.D,
        connected=component_count(g) == 1,
        co_connected=component_count(complement_circulant(g)) == 1,
        p4_free=is_p4_free_circulant(g),
        cis=wc and cowc and a * w == g.n,
        well_covered=wc,
        co_well_covered=cowc,
        alpha=a,
        omega=w,
        paired=format_spec(spec) if spec is not None else None,
    )


def parse_filters(text: Optional[str]) -> tuple[str, ...]:
    if not text or text.strip() in ("", "none"):
        return ()
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    for name in names:
        if name not in FILTERS:
            raise ParseError(f"unknown filter {name!r}; choose from {', '.join(FILTERS)}")
    return names


def _passes(n: int, half: int, filters: tuple[str, ...], orders) -> Optional[Circulant]:
    """The circulant if it passes every filter (cheapest tests first), else None."""
    full_half = (1 << (n // 2)) - 1
    if "connected" in filters and _half_gcd(n, half) != 1:
        return None
    if "co-connected" in filters and _half_gcd(n, full_half & ~half) != 1:
        return None
    ds = _full_distances(n, half)
    g = Circulant(n, DistanceSet(n, ds))
    if "p4-free" in filters or "non-p4-free" in filters:
        p4 = is_p4_free_circulant(g)
        if ("p4-free" in filters and not p4) or ("non-p4-free" in filters and p4):
            return None
    if "cis" in filters:
        row0 = g.row0
        co_row0 = ((1 << n) - 1) & ~row0 & ~1
        if not cis_screen(n, row0, co_row0, orders) or not is_cis_fast(g):
            return None
    if "non-cis" in filters and is_cis_fast(g):
        return None
    if "co-well-covered" in filters and uniform_clique_size(g.adjacency, 0) is None:
        return None
    if "well-covered" in filters and uniform_clique_size(complement_circulant(g).adjacency, 0) is None:
        return None
    return g


def _canonical(g: Circulant) -> bool:
    """D is lexicographically least among its Cayley-multiplier images."""
    n = g.n
    return all(tuple(sorted((q * d) % n for d in g.D)) >= g.D for q in units(n))


def block_count(n: int) -> int:
    return max(1, (1 << (n // 2)) >> BLOCK_BITS)


def run_block(n: int, b: int, filters: tuple[str, ...], k_max: int, canonical: bool) -> list[dict]:
    """Records (as dicts, sorted by D) of block b of order n."""
    h = n // 2
    lo = b << BLOCK_BITS
    hi = min(1 << h, lo + (1 << BLOCK_BITS))
    orders = _orders(n) if n > 1 else [[]]
    use_canonical = canonical and is_squarefree(n)
    out = []
    for half in range(lo, hi):
        g = _passes(n, half, filters, orders)
        if g is None or (use_canonical and not _canonical(g)):
            continue
        out.append(make_record(g, k_max))
    out.sort(key=lambda r: r.D)
    return [r.to_dict() for r in out]


# --- checkpointing ------------------------------------------------------------

@dataclass
class CensusRun:
    records: list[CensusRecord]
    complete: bool
    blocks_done: int
    blocks_total: int
    params: dict = field(default_factory=dict)


def _load_checkpoint(path: str, params: dict) -> dict[tuple[int, int], list[dict]]:
    done: dict[tuple[int, int], list[dict]] = {}
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if not lines or not lines[0].strip():
        return done
    header = json.loads(lines[0])
    if header.get("params") != params:
        raise CircisError(f"checkpoint {path} was written for different parameters: {header.get('params')}")
    for line in lines[1:]:
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError:
            # torn final write from an interrupted run
            break
        done[tuple(entry["block"])] = entry["records"]
    return done


def census(
    n_min: int,
    n_max: int,
    filters: Iterable[str] = (),
    jobs: int = 1,
    *,
    k_max: int = DEFAULT_K_MAX,
    canonical: bool = False,
    checkpoint: Optional[str] = None,
    stop_after: Optional[int] = None,
    cap: int = CENSUS_CAP,
    progress: Optional[Callable[[int, int], None]] = None,
) -> CensusRun:
    """All records for orders n_min..n_max passing every filter.

    With ``checkpoint`` set, finished blocks are appended to that JSON
    Lines file and skipped when the same call is repeated.  ``stop_after``
    ends the run after that many newly computed blocks (for testing
    resumption); the run is then reported incomplete.
    """
    filters = tuple(filters)
    for name in filters:
        if name not in FILTERS:
            raise ParseError(f"unknown filter {name!r}")
    if n_min < 1 or n_max < n_min:
        raise OutOfRange(f"bad order range {n_min}..{n_max}")
    if n_max > cap:
        raise CapExceeded(f"census capped at order {cap}, asked for {n_max}")
    params = {"range": [n_min, n_max], "filters": sorted(filters), "k_max": k_max, "canonical": canonical}
    tasks = [(n, b) for n in range(n_min, n_max + 1) for b in range(block_count(n))]

    done: dict[tuple[int, int], list[dict]] = {}
    fh = None
    if checkpoint:
        if os.path.exists(checkpoint) and os.path.getsize(checkpoint) > 0:
            done = _load_checkpoint(checkpoint, params)
        # rewrite from what was loaded, dropping any torn tail
        fh = open(checkpoint, "w", encoding="utf-8")
        fh.write(json.dumps({"params": params}) + "\n")
        for task in tasks:
            if task in done:
                fh.write(json.dumps({"block": list(task), "records": done[task]}) + "\n")
        fh.flush()

    todo = [t for t in tasks if t not in done]
    if stop_after is not None:
        todo = todo[:stop_after]
    fresh = 0

    def finish(task, recs):
        nonlocal fresh
        done[task] = recs
        fresh += 1
        if fh:
            fh.write(json.dumps({"block": list(task), "records": recs}) + "\n")
            fh.flush()
        if progress:
            progress(len(done), len(tasks))

    try:
        if jobs <= 1:
            for task in todo:
                finish(task, run_block(*task, filters, k_max, canonical))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = {pool.submit(run_block, *t, filters, k_max, canonical): t for t in todo}
                for fut in as_completed(futures):
                    finish(futures[fut], fut.result())
    finally:
        if fh:
            fh.close()

    complete = all(t in done for t in tasks)
    records = [CensusRecord.from_dict(r) for t in tasks if t in done for r in done[t]]
    records.sort(key=lambda r: r.key)
    return CensusRun(records, complete, len(done), len(tasks), params)


def write_jsonl(records: Iterable[CensusRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def read_jsonl(path: str) -> list[CensusRecord]:
    with open(path, encoding="utf-8") as fh:
        return [CensusRecord.from_dict(json.loads(line)) for line in fh if line.strip()]
