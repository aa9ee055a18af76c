"""Working with k-paired specs: realising them, products and reductions.

Run:  python demos/paired_calculus.py
"""
from circis import format_spec, is_cis_circulant, realize, spec
from circis.paired import (
    clique_size_formulas,
    co_reduce,
    is_cis_2paired,
    lcm_reduce,
    paired_lex_product,
    reduce_connected,
)

h = spec(36, (2, 2), (3, 3))
print(f"{format_spec(h)}: clique sizes by formula {clique_size_formulas(h)}")

# the gcd rule versus the graph itself
for s in (spec(12, (2, 2), (3, 2)), h, spec(60, (2, 2), (3, 5)), spec(60, (2, 2), (5, 3))):
    print(f"  {format_spec(s):16} rule says CIS={is_cis_2paired(s)!s:5}  graph says CIS={is_cis_circulant(realize(s)).is_cis}")

hh = paired_lex_product(h, h)
print(f"H[H] = {format_spec(hh)} on {hh.n} vertices")

# an order that is a multiple of the lcm is a lex product with an empty graph
core, m = lcm_reduce(spec(24, (2, 2), (3, 2)))
print(f"C(24;2,2;3,2) = {format_spec(core)}[S_{m}]")

print(f"components of C(12;4,3) look like {format_spec(reduce_connected(spec(12, (4, 3))))}")
b, rest = co_reduce(spec(6, (1, 2), (3, 2)))
print(f"C(6;1,2;3,2) = K_{b}[{format_spec(rest)}]")
