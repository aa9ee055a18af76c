import math

from hypothesis import given, settings, strategies as st

from circis.circulant import (
    cayley_multiplier,
    circulant_from_half_mask,
    complement_circulant,
    component_count,
    half_mask,
    lex_product,
    make_circulant,
)
from circis.cis import is_cis_bruteforce, is_cis_circulant
from circis.census import is_p4_free_circulant, make_record
from circis.enumeration import alpha, gap_sequence, generate, omega
from circis.graphs import SimpleGraph, from_edge_list, from_graph6, is_p4_free, lex_product_graph, to_edge_list, to_graph6
from circis.numtheory import units
from circis.paired import (
    PairedSpec,
    format_spec,
    paired_component_count,
    paired_is_co_connected,
    paired_lex_product,
    parse_spec,
    realize,
    recognize_paired,
)

from oracles import brute_cis, union_find_components


@st.composite
def circulants(draw, max_n=16):
    n = draw(st.integers(1, max_n))
    return circulant_from_half_mask(n, draw(st.integers(0, (1 << (n // 2)) - 1)))


@st.composite
def paired_specs(draw, max_n=36, max_k=2):
    n = draw(st.integers(1, max_n))
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    pairs = []
    for _ in range(draw(st.integers(0, max_k))):
        a = draw(st.sampled_from(divisors))
        b = draw(st.sampled_from([d for d in range(1, n // a + 1) if (n // a) % d == 0]))
        pairs.append((a, b))
    return PairedSpec(n, tuple(pairs))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@given(circulants())
def test_complement_is_an_involution(g):
    co = complement_circulant(g)
    assert complement_circulant(co) == g
    assert co.to_graph() == g.to_graph().complement()


@given(circulants(max_n=14))
def test_cis_fast_path_matches_bruteforce(g):
    fast = is_cis_circulant(g)
    assert fast.is_cis == is_cis_bruteforce(g).is_cis == brute_cis(g.to_graph())
    assert fast.is_cis == is_cis_circulant(complement_circulant(g)).is_cis


@given(circulants(max_n=24))
def test_alpha_omega_at_most_n(g):
    assert alpha(g) * omega(g) <= g.n


@given(circulants(max_n=24))
def test_component_count_is_a_gcd(g):
    assert component_count(g) == math.gcd(g.n, *g.D)
    assert component_count(g) == union_find_components(g.to_graph())


@given(circulants(max_n=20))
def test_half_mask_round_trip(g):
    assert circulant_from_half_mask(g.n, half_mask(g)) == g


@given(circulants(max_n=18), st.data())
def test_multiplier_images_are_isomorphic(g, data):
    q = data.draw(st.sampled_from(sorted(units(g.n)) or [1]))
    h = make_circulant(g.n, {(q * d) % g.n for d in g.D})
    assert cayley_multiplier(g, h) is not None
    assert make_record(g, 0).cis == make_record(h, 0).cis
    assert (alpha(g), omega(g)) == (alpha(h), omega(h))


@given(circulants(max_n=7), circulants(max_n=5))
def test_lex_product_flattening_and_cis(g, h):
    p = lex_product(g, h)
    assert p.n == g.n * h.n
    flat = lex_product_graph(g.to_graph(), h.to_graph())
    assert flat.m == p.to_graph().m
    assert is_cis_circulant(p).is_cis == (is_cis_circulant(g).is_cis and is_cis_circulant(h).is_cis)


@given(circulants(max_n=20))
def test_p4_free_arithmetic_matches_generic(g):
    assert is_p4_free_circulant(g) == is_p4_free(g.to_graph())


@given(paired_specs(max_n=24), paired_specs(max_n=6, max_k=1))
def test_paired_lex_product_realizes(s, t):
    assert realize(paired_lex_product(s, t)) == lex_product(realize(s), realize(t))


@given(paired_specs())
def test_paired_arithmetic_matches_graph(s):
    g = realize(s)
    assert paired_component_count(s) == component_count(g)
    assert paired_is_co_connected(s) == (component_count(complement_circulant(g)) == 1)
    assert parse_spec(format_spec(s)) == s


@settings(max_examples=40)
@given(paired_specs(max_n=24))
def test_recognition_round_trip(s):
    found = recognize_paired(realize(s), 2)
    assert found is not None and realize(found) == realize(s)


@given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1))))
def test_gap_sequence_round_trip(arg):
    n, xs = arg
    base, gaps = gap_sequence(xs, n)
    assert sum(gaps) == n and generate(gaps, base, n) == xs


@given(graphs(max_n=12))
def test_text_formats_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g
    if g.n:
        assert from_graph6(to_graph6(g)) == g
