import math

import pytest

from circis.circulant import (
    complete_circulant,
    component_count,
    edgeless_circulant,
    is_co_connected_circulant,
    is_connected_circulant,
    lex_product,
    make_circulant,
)
from circis.cis import is_cis_bruteforce
from circis.enumeration import maximal_clique_masks
from circis.errors import BadIndex, CapExceeded, EmptySpec, OutOfRange, ParseError, PreconditionViolated
from circis.graphs import is_p4_free
from circis.paired import (
    PairedSpec,
    blocking_stable_triple,
    clique_size_formulas,
    co_reduce,
    format_spec,
    gn_family,
    is_cis_2paired,
    is_p4_free_paired,
    lcm_reduce,
    paired_component_count,
    paired_distance_set,
    paired_is_co_connected,
    paired_is_connected,
    paired_lex_product,
    parse_spec,
    realize,
    recognize_paired,
    reduce_connected,
    spec,
    two_pair_specs,
)

from oracles import distance_set_by_definition

C12 = spec(12, (2, 2), (3, 2))
C36 = spec(36, (2, 2), (3, 3))


def test_spec_validation():
    with pytest.raises(OutOfRange):
        spec(10, (3, 2))
    with pytest.raises(OutOfRange):
        spec(10, (0, 2))
    assert spec(6, (1, 1), (1, 1)).k == 2


def test_distance_sets():
    assert paired_distance_set(C12).distances == (2, 3, 6, 9, 10)
    assert paired_distance_set(C36).distances == (2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34)
    assert realize(PairedSpec(7)) == edgeless_circulant(7)
    assert realize(spec(7, (1, 7))) == complete_circulant(7)


def test_distance_set_matches_definition():
    for s in two_pair_specs(30):
        assert list(realize(s).D) == distance_set_by_definition(s.n, s.pairs)


def test_paired_lex_product():
    assert paired_lex_product(C36, C36) == spec(1296, (2, 2), (3, 3), (72, 2), (108, 3))
    assert realize(paired_lex_product(spec(4, (2, 2)), PairedSpec(3))) == realize(spec(12, (2, 2)))
    assert paired_lex_product(C12, PairedSpec(1)) == C12
    for s in list(two_pair_specs(8))[::5]:
        for t in list(two_pair_specs(6))[::7]:
            assert realize(paired_lex_product(s, t)) == lex_product(realize(s), realize(t))


def test_lcm_reduce():
    assert lcm_reduce(spec(24, (2, 2), (3, 2))) == (C12, 2)
    assert lcm_reduce(C12) == (C12, 1)
    assert lcm_reduce(spec(10, (1, 2))) == (spec(2, (1, 2)), 5)
    core, m = lcm_reduce(spec(24, (2, 2), (3, 2)))
    assert realize(paired_lex_product(core, PairedSpec(m))) == realize(spec(24, (2, 2), (3, 2)))
    with pytest.raises(EmptySpec):
        lcm_reduce(PairedSpec(5))


def test_component_count_and_reduction():
    assert paired_component_count(C12) == 1
    assert paired_component_count(spec(9, (3, 1))) == 9
    s = spec(12, (4, 3))
    assert paired_component_count(s) == 4
    assert reduce_connected(s) == spec(3, (1, 3))
    for t in two_pair_specs(36):
        g = realize(t)
        assert paired_component_count(t) == component_count(g)
        assert paired_is_connected(t) == is_connected_circulant(g)
        assert paired_is_co_connected(t) == is_co_connected_circulant(g), format_spec(t)
        comp = realize(reduce_connected(t))
        assert comp.n * component_count(g) == g.n
        assert is_connected_circulant(comp)


def test_co_reduce():
    assert paired_is_co_connected(C36)
    b, core = co_reduce(spec(12, (1, 3)))
    assert (b, core) == (3, PairedSpec(4))
    b, core = co_reduce(spec(6, (1, 2), (3, 2)), 0)
    assert (b, core) == (2, spec(3, (3, 1)))
    assert realize(spec(6, (1, 2), (3, 2))) == lex_product(complete_circulant(2), realize(core))
    with pytest.raises(BadIndex):
        co_reduce(C12, 0)
    with pytest.raises(BadIndex):
        co_reduce(C12)
    with pytest.raises(BadIndex):
        co_reduce(spec(6, (1, 2)), 3)


def test_co_reduce_identity_sweep():
    for s in two_pair_specs(30):
        for i, (a, b) in enumerate(s.pairs):
            if a == 1 and b > 1:
                b_l, core = co_reduce(s, i)
                assert realize(s) == lex_product(complete_circulant(b_l), realize(core)), format_spec(s)


def test_recognize_paired():
    assert recognize_paired(make_circulant(6, {1, 3, 5}), 1) == spec(6, (1, 2))
    assert recognize_paired(make_circulant(5, {1, 4}), 5) is None
    found = recognize_paired(realize(C12), 2)
    assert found is not None and found.k == 2 and realize(found) == realize(C12)
    assert recognize_paired(edgeless_circulant(4), 1) == PairedSpec(4)


def test_recognize_returns_minimum_k():
    for s in list(two_pair_specs(24))[::3]:
        found = recognize_paired(realize(s), 2)
        assert found is not None and realize(found) == realize(s)
        one = recognize_paired(realize(s), 1)
        if one is not None:
            assert found.k <= 1


def test_clique_size_formulas():
    assert clique_size_formulas(C12) == (2, 4)
    assert clique_size_formulas(C36) == (6, 6)
    assert clique_size_formulas(spec(60, (2, 2), (5, 3))) == (6, 6)
    with pytest.raises(PreconditionViolated):
        clique_size_formulas(spec(24, (2, 2), (3, 2)))
    with pytest.raises(PreconditionViolated):
        clique_size_formulas(spec(12, (2, 2)))


def test_is_cis_2paired():
    assert not is_cis_2paired(C12)
    assert is_cis_2paired(C36)
    assert is_cis_2paired(spec(60, (2, 2), (3, 5)))
    with pytest.raises(PreconditionViolated):
        is_cis_2paired(spec(12, (1, 2), (3, 2)))


def test_blocking_stable_triple():
    # frozen by applying the formulas by hand: alpha = a2 gcd(b1, b2), 2 + beta a2 = 0 mod a1 b1
    assert blocking_stable_triple(spec(30, (2, 5), (3, 5))) == (0, 1, 20)
    assert blocking_stable_triple(spec(42, (2, 7), (3, 7))) == (0, 1, 14)
    # a2 = 2 < 3, so the pairs are swapped before the formulas apply
    assert blocking_stable_triple(spec(30, (3, 5), (2, 5))) == (0, 1, 20)
    with pytest.raises(PreconditionViolated):
        blocking_stable_triple(C36)
    with pytest.raises(PreconditionViolated):
        # gcd(a1, a2 b2) = gcd(2, 6) = 2
        blocking_stable_triple(spec(24, (2, 4), (3, 2)))
    with pytest.raises(OutOfRange):
        # a1 b1 = 8 does not divide 36, so this is not a valid spec at all
        spec(36, (2, 4), (3, 2))


def test_blocking_triple_is_blocking():
    s = spec(30, (2, 5), (3, 5))
    g = realize(s).to_graph()
    t = blocking_stable_triple(s)
    mask = sum(1 << v for v in t)
    assert g.is_stable(mask)
    co = g.complement()
    common = co.adj[t[0]] & co.adj[t[1]] & co.adj[t[2]]
    sizes = [3 + m.bit_count() for m in maximal_clique_masks(co.adj, common)] or [3]
    assert max(sizes) < 6


def test_gn_family():
    assert gn_family(1) == spec(6, (1, 2))
    g2 = gn_family(2)
    assert g2 == spec(210, (35, 2), (1, 5))
    assert realize(g2) == realize(paired_lex_product(spec(35, (1, 5)), spec(6, (1, 2))))
    assert gn_family(3).n == 30030
    with pytest.raises(CapExceeded):
        gn_family(4)
    with pytest.raises(OutOfRange):
        gn_family(0)
    for k in (1, 2, 3):
        n = gn_family(k).n
        assert all(n % (p * p) for p in range(2, 20))


def test_p4_free_paired():
    assert not is_p4_free_paired(C36)
    assert all(is_p4_free_paired(spec(n, (a, n // a))) for n in range(1, 25) for a in range(1, n + 1) if n % a == 0)
    for s in two_pair_specs(20):
        assert is_p4_free_paired(s) == is_p4_free(realize(s).to_graph()), format_spec(s)


def test_text_format():
    assert format_spec(C12) == "C(12;2,2;3,2)"
    assert format_spec(PairedSpec(5)) == "C(5;)"
    assert parse_spec("C(12;2,2;3,2)") == C12
    assert parse_spec(" C( 12 ; 2 , 2 ; 3 , 2 ) ") == C12
    assert parse_spec("C(5;)") == PairedSpec(5)
    assert parse_spec("C(5;∅)") == PairedSpec(5)
    for bad in ("C(12;2)", "12;2,2", "C(12;a,b)"):
        with pytest.raises(ParseError):
            parse_spec(bad)


def test_gcd_rule_on_small_specs():
    # brute force agrees with the gcd rule on every connected co-connected spec up to 36
    for s in two_pair_specs(36):
        if paired_is_connected(s) and paired_is_co_connected(s):
            (a1, b1), (a2, b2) = s.pairs
            assert is_cis_bruteforce(realize(s)).is_cis == (math.gcd(a1 * b1, a2 * b2) == 1)
