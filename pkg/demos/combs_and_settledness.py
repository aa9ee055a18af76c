"""Combs, settling vertices and the graph that shows settledness is not enough.

Run:  python demos/combs_and_settledness.py
"""
from circis.cis import almost_cis, is_cis_bruteforce
from circis.combs import bull_graph, cis_extension, find_unsettled, holzman_graph, p4_graph

p4 = p4_graph()
rep = is_cis_bruteforce(p4)
print(f"P4 is CIS: {rep.is_cis}; disjoint pair {sorted(rep.witness[0])} / {sorted(rep.witness[1])}")
for v in find_unsettled(p4, 2):
    print(f"  unsettled {v.kind}: stable side {v.stable_side}, clique side {v.clique_side}")
print(f"P4 has exactly one disjoint pair, so it is almost CIS: {almost_cis(p4).is_almost_cis}")

bull = bull_graph()
print(f"the bull settles its P4: unsettled={find_unsettled(bull, 2)}, CIS={is_cis_bruteforce(bull).is_cis}")

h = holzman_graph()
print(f"Holzman graph: {h.n} vertices, unsettled combs up to k=4: {len(find_unsettled(h, 4))}, "
      f"CIS={is_cis_bruteforce(h).is_cis}")

ext = cis_extension(h)
print(f"its CIS extension has {ext.n} vertices and CIS={is_cis_bruteforce(ext).is_cis}")
