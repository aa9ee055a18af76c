import networkx as nx
import pytest

from circis.errors import OutOfRange, ParseError
from circis.graphs import (
    SimpleGraph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    from_edge_list,
    from_graph6,
    has_induced_p4_bruteforce,
    is_co_connected,
    is_connected,
    is_p4_free,
    join,
    lex_product_graph,
    path_graph,
    to_edge_list,
    to_graph6,
    to_networkx,
)


def test_validation():
    with pytest.raises(OutOfRange):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(OutOfRange):
        SimpleGraph.from_edges(3, [(0, 3)])
    with pytest.raises(OutOfRange):
        SimpleGraph(2, (0b10, 0))


def test_basic_counts():
    assert complete_graph(5).m == 10
    assert edgeless_graph(4).m == 0
    assert path_graph(4).edges == {(0, 1), (1, 2), (2, 3)}
    assert cycle_graph(5).complement().m == 5


def test_lex_product_graph_examples():
    k2, s2 = complete_graph(2), edgeless_graph(2)
    assert lex_product_graph(k2, s2) == SimpleGraph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    g = cycle_graph(5)
    assert lex_product_graph(g, complete_graph(1)) == g
    assert lex_product_graph(s2, k2) == SimpleGraph.from_edges(4, [(0, 1), (2, 3)])


def test_lex_product_complement_law_small():
    graphs = [complete_graph(1), edgeless_graph(2), complete_graph(2), path_graph(3), path_graph(4), cycle_graph(5)]
    for g in graphs:
        for h in graphs:
            assert lex_product_graph(g, h).complement() == lex_product_graph(g.complement(), h.complement())


def test_components_and_connectivity():
    g = disjoint_union(path_graph(3), complete_graph(2))
    assert components(g) == [0b00111, 0b11000]
    assert not is_connected(g)
    assert is_co_connected(g)
    assert not is_co_connected(join(edgeless_graph(2), edgeless_graph(3)))


def test_p4_free():
    assert not is_p4_free(path_graph(4))
    assert is_p4_free(join(edgeless_graph(2), complete_graph(3)))
    assert not is_p4_free(cycle_graph(5))
    assert is_p4_free(cycle_graph(4))
    assert has_induced_p4_bruteforce(path_graph(4))
    with pytest.raises(OutOfRange):
        has_induced_p4_bruteforce(complete_graph(13))


def test_edge_list_round_trip():
    g = cycle_graph(5)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "5 5"
    assert from_edge_list(text) == g
    with pytest.raises(ParseError):
        from_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        from_edge_list("x")


def test_graph6_round_trip_and_known_value():
    p4 = path_graph(4)
    # the graph6 code of P4 as networkx writes it
    assert to_graph6(p4) == nx.to_graph6_bytes(nx.path_graph(4), header=False).decode().strip()
    assert from_graph6(to_graph6(p4)) == p4
    assert from_graph6(">>graph6<<" + to_graph6(p4)) == p4
    with pytest.raises(ParseError):
        from_graph6("\x01")


def test_to_networkx():
    nxg = to_networkx(cycle_graph(6))
    assert nxg.number_of_edges() == 6
