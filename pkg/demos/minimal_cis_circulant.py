"""The smallest connected, co-connected CIS circulant, found and dissected.

Run:  python demos/minimal_cis_circulant.py
"""
from circis import census, format_spec, is_cis_circulant, realize, spec
from circis.circulant import complement_circulant
from circis.enumeration import canonical_gap_classes, cliques_through, format_gap_class
from circis._bits import iter_bits


def classes(g):
    through0 = (list(iter_bits(m)) for m in cliques_through(g.adjacency, 0))
    return [format_gap_class(c) for c in sorted(canonical_gap_classes(through0, g.n))]


s = spec(36, (2, 2), (3, 3))
g = realize(s)
print(f"{format_spec(s)} has distances {list(g.D)}")

rep = is_cis_circulant(g)
print(f"CIS: {rep.is_cis}  alpha={rep.alpha}  omega={rep.omega}  alpha*omega={rep.alpha * rep.omega}")
print("maximal clique shapes (gaps around the cycle):", ", ".join(classes(g)))
print("maximal stable set shapes:", ", ".join(classes(complement_circulant(g))))

# every other connected co-connected circulant up to order 36 fails
run = census(30, 36, ["connected", "co-connected", "cis"])
for r in run.records:
    print(f"census hit: n={r.n}  D={list(r.D)}  paired as {r.paired}")
