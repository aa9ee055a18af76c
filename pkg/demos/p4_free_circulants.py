"""P4-free circulants are exactly the paired ones; the G_n family needs more pairs.

Run:  python demos/p4_free_circulants.py
"""
from circis import format_spec, realize
from circis.census import census
from circis.circulant import cayley_multiplier
from circis.graphs import is_p4_free
from circis.paired import PairedSpec, gn_family, is_p4_free_paired, recognize_paired, two_pair_specs

hits = census(1, 16, ["p4-free"]).records
print(f"P4-free circulants with n <= 16: {len(hits)}, all paired: {all(r.paired for r in hits)}")

g2 = gn_family(2)
g = realize(g2)
print(f"G_2 = {format_spec(g2)}, P4-free: {is_p4_free(g.to_graph())}")
print(f"recognised with one pair: {recognize_paired(g, 1)}; with two: {recognize_paired(g, 2)}")

# 210 is square-free, so isomorphic circulants of order 210 differ by a multiplier;
# none of the 1-paired ones maps onto G_2
divisors = [d for d in range(1, 211) if 210 % d == 0]
ones = [PairedSpec(210, ((a, b),)) for a in divisors for b in divisors if 210 % (a * b) == 0]
iso = [format_spec(s) for s in ones if cayley_multiplier(realize(s), g) is not None]
print(f"{len(ones)} 1-paired circulants of order 210, isomorphic to G_2: {iso or 'none'}")

agree = all(is_p4_free_paired(s) == is_p4_free(realize(s).to_graph()) for s in two_pair_specs(24))
print(f"arithmetic P4 test agrees with the graph test on all 2-pair specs up to 24: {agree}")
