import json
import random

import pytest

from circis.circulant import circulant_from_half_mask, cycle_circulant, edgeless_circulant, make_circulant
from circis.cis import (
    almost_cis,
    alpha_omega_bound,
    is_cis,
    is_cis_bruteforce,
    is_cis_circulant,
    is_split_with_unique_partition,
    split_partitions,
)
from circis.combs import bull_graph, holzman_graph, p4_graph
from circis.errors import EmptyGraph
from circis.graphs import SimpleGraph, complete_graph, cycle_graph, edgeless_graph
from circis.paired import realize, spec

from oracles import brute_cis


def _maximal(g, mask):
    # a clique is maximal when no outside vertex sees all of it
    return g.is_clique(mask) and all(g.adj[v] & mask != mask for v in range(g.n) if not mask >> v & 1)


def _valid_witness(g, report):
    sg = g.to_graph() if hasattr(g, "to_graph") else g
    c, s = report.witness
    cm, sm = sum(1 << v for v in c), sum(1 << v for v in s)
    return not c & s and _maximal(sg, cm) and _maximal(sg.complement(), sm)


def test_small_graphs():
    assert not is_cis(p4_graph())
    assert is_cis(bull_graph())
    assert is_cis(complete_graph(4)) and is_cis(edgeless_graph(4))
    assert not is_cis(cycle_graph(5))
    assert not is_cis(holzman_graph())


def test_report_fields():
    r = is_cis_bruteforce(p4_graph())
    assert (r.alpha, r.omega, r.well_covered, r.co_well_covered) == (2, 2, True, True)
    assert _valid_witness(p4_graph(), r)
    with pytest.raises(EmptyGraph):
        is_cis_bruteforce(SimpleGraph(0, ()))


def test_circulant_examples():
    c12 = realize(spec(12, (2, 2), (3, 2)))
    r = is_cis_circulant(c12)
    assert not r.is_cis and not r.co_well_covered
    assert _valid_witness(c12, r)
    c36 = realize(spec(36, (2, 2), (3, 3)))
    r = is_cis_circulant(c36)
    assert r.is_cis and (r.alpha, r.omega) == (6, 6) and r.witness is None
    c5 = cycle_circulant(5)
    r = is_cis_circulant(c5)
    # C5 is well-covered on both sides, yet alpha * omega = 4 < 5
    assert r.well_covered and r.co_well_covered and not r.is_cis
    c6 = cycle_circulant(6)
    assert not is_cis_circulant(c6).is_cis
    assert is_cis_circulant(edgeless_circulant(1)).is_cis


def test_json_shape():
    d = json.loads(is_cis_circulant(cycle_circulant(5)).to_json())
    assert set(d) == {"n", "D", "cis", "alpha", "omega", "wc", "cowc", "witness"}
    assert d["D"] == [1, 4] and set(d["witness"]) == {"C", "S"}
    assert is_cis_bruteforce(p4_graph()).to_dict()["D"] is None


def test_fast_path_agrees_with_bruteforce():
    for n in range(1, 15):
        for m in range(1 << (n // 2)):
            g = circulant_from_half_mask(n, m)
            fast, slow = is_cis_circulant(g), is_cis_bruteforce(g)
            assert fast.is_cis == slow.is_cis == brute_cis(g.to_graph()), g
            assert (fast.alpha, fast.omega) == (slow.alpha, slow.omega)
            assert alpha_omega_bound(g)
            if not fast.is_cis:
                assert _valid_witness(g, fast)


def test_random_graphs_against_oracle():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        r = is_cis_bruteforce(g)
        assert r.is_cis == brute_cis(g)
        if not r.is_cis:
            assert _valid_witness(g, r)


def test_almost_cis():
    r = almost_cis(p4_graph())
    assert r.is_almost_cis
    assert r.pair == (frozenset({1, 2}), frozenset({0, 3}))
    assert almost_cis(bull_graph()).disjoint_pairs == 0
    assert almost_cis(cycle_graph(5)).disjoint_pairs == 5
    assert not almost_cis(cycle_graph(5)).is_almost_cis


def test_split_partitions():
    parts = split_partitions(p4_graph())
    assert (frozenset({1, 2}), frozenset({0, 3})) in parts
    assert is_split_with_unique_partition(p4_graph())
    # K2 splits as {0,1}|{}, {0}|{1}, {1}|{0}
    assert len(split_partitions(complete_graph(2))) == 3
    assert not is_split_with_unique_partition(complete_graph(2))
    assert split_partitions(cycle_graph(5)) == []
    assert len(split_partitions(complete_graph(3), limit=2)) == 2
