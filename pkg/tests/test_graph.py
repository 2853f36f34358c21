import pytest

from starfree.graph import (
    Graph,
    Graph6Error,
    GraphError,
    VertexSet,
    complement,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    induced,
    join,
    parse_edge_list,
    parse_graph6,
)

from .conftest import seeded_graphs


def test_graph6_star():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0


def test_graph6_header_prefix():
    assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")


def test_graph6_round_trip():
    for g in seeded_graphs(3, 60, 70):
        assert parse_graph6(emit_graph6(g)) == g


def test_graph6_long_form():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    text = emit_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D?", "D?{{", "D ?{", "~~", "D?|"])
def test_graph6_rejects(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_null_graph_not_emitted():
    with pytest.raises(Graph6Error):
        emit_graph6(Graph.empty(0))


def test_edge_list_round_trip():
    g = Graph.from_edges(6, [(0, 1), (2, 3)])
    text = emit_edge_list(g)
    assert text.startswith("# n 6")
    assert parse_edge_list(text) == g


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list("0 0\n")


def test_construction_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (1,))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 5)])


def test_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.adjacent(2, 3) and not g.adjacent(0, 3)
    assert g.max_degree == 2 and g.min_degree == 1


def test_induced_keeps_order():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h = induced(g, [0, 2, 3])
    assert h.n == 3 and h.edges() == [(1, 2)]
    assert induced(g, VertexSet.of(5, [0, 1])).m == 1


def test_complement_union_join():
    k3 = Graph.complete(3)
    assert complement(k3).m == 0
    u = disjoint_union(k3, Graph.empty(2))
    assert u.n == 5 and u.m == 3
    j = join(Graph.empty(2), Graph.empty(3))
    assert j.m == 6


def test_vertex_set():
    s = VertexSet.of(5, [4, 1])
    assert s.tolist() == [1, 4]
    assert len(s) == 2 and 4 in s and 0 not in s
    with pytest.raises(GraphError):
        VertexSet(3, 0b1000)


def test_relabel_preserves_structure():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    h = g.relabel([3, 2, 1, 0])
    assert sorted(h.edges()) == [(1, 2), (2, 3)]
