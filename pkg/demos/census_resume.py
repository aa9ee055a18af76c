"""A checkpointed census that is interrupted and resumed.

Run:  python demos/census_resume.py
"""
import os
import tempfile

from circis.census import census

filters = ["connected", "non-cis", "well-covered"]
with tempfile.TemporaryDirectory() as tmp:
    ck = os.path.join(tmp, "census.ckpt")
    part = census(2, 30, filters, checkpoint=ck, stop_after=10)
    print(f"first pass stopped after {part.blocks_done}/{part.blocks_total} blocks")
    done = census(2, 30, filters, checkpoint=ck)
    print(f"resumed pass complete={done.complete}, {len(done.records)} records")
    fresh = census(2, 30, filters)
    print(f"matches an uninterrupted run: {done.records == fresh.records}")

by_n = {}
for r in done.records:
    by_n[r.n] = by_n.get(r.n, 0) + 1
print("connected, well-covered, non-CIS circulants per order:", by_n)
