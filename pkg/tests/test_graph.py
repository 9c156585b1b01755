from __future__ import annotations

import pytest

from tndi import graph as gr
from tndi.graph import FamilySpec, Graph, ParameterError


def test_graph_canonicalizes_edges():
    g = Graph("g", 3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.degrees == (2, 1, 1)


@pytest.mark.parametrize(
    "edges, message",
    [([(1, 1)], "self-loop"), ([(0, 3)], "outside"), ([(0, 1), (1, 0)], "duplicate")],
)
def test_graph_rejects_bad_edges(edges, message):
    with pytest.raises(ValueError, match=message):
        Graph("bad", 3, edges)


def test_star_and_wheel_layout():
    s = gr.star(3)
    assert (s.n, s.m, s.max_degree) == (4, 3, 3)
    assert s.edges == ((0, 1), (0, 2), (0, 3))
    w = gr.wheel(5)
    assert (w.n, w.m, w.max_degree) == (6, 10, 5)
    assert w.has_edge(5, 1) and w.has_edge(1, 2)


def test_builder_bounds_name_the_parameter():
    with pytest.raises(ParameterError, match="m >= 3"):
        gr.wheel(2)
    with pytest.raises(ParameterError, match="n >= 3"):
        gr.cycle(2)
    with pytest.raises(ParameterError, match="m >= 2"):
        gr.build(FamilySpec.of("star", 1))


def test_product_counts_and_layers():
    g = gr.build(FamilySpec.parse("C3xP2"))
    assert (g.n, g.m) == (6, 9)
    assert gr.layer(g, 1) == [0, 1, 2]
    assert gr.layer(g, 2) == [3, 4, 5]
    assert gr.rung_edges(g, 1) == [(0, 3), (1, 4), (2, 5)]
    with pytest.raises(IndexError):
        gr.rung_edges(g, 2)


def test_layer_requires_product():
    with pytest.raises(gr.NotAProductError):
        gr.layer(gr.path(2), 1)


def test_wrap_rungs_only_on_cyclic_second_factor():
    t = gr.build(FamilySpec.parse("C3xC3"))
    assert gr.rung_edges(t, 3) == [(0, 6), (1, 7), (2, 8)]
    assert len(gr.rung_edges(gr.build(FamilySpec.parse("S4xP3")), 2)) == 5
    with pytest.raises(IndexError):
        gr.rung_edges(gr.build(FamilySpec.parse("C3xP3")), 3)


def test_small_products():
    sq = gr.cartesian_product(gr.path(2), gr.path(2))
    assert (sq.n, sq.m, set(sq.degrees)) == (4, 4, {2})
    g = gr.cartesian_product(gr.path(3), gr.path(3))
    assert (g.n, g.m) == (9, 12)
    assert g.degrees.count(4) == 1
    assert gr.adjacent_max_pair(g) is None
    k = gr.cartesian_product(gr.complete(4), gr.path(2))
    assert (k.n, k.m) == (8, 16) and k.is_regular()


def test_adjacent_max_pair():
    assert gr.adjacent_max_pair(gr.star(3)) is None
    u, v = gr.adjacent_max_pair(gr.path(4))
    assert gr.path(4).degrees[u] == gr.path(4).degrees[v] == 2


def test_spec_parse_and_label_round_trip():
    for text in ["W5", "K2,3", "Q3", "S4xP3", "C5xC4", "P1"]:
        assert FamilySpec.parse(text).label == text
    assert FamilySpec.of("torus", 5, 4) == FamilySpec.parse("C5xC4")
    with pytest.raises(ParameterError):
        FamilySpec.parse("Z4")


def test_hypercube_is_regular_bipartite():
    q = gr.hypercube(3)
    assert (q.n, q.m) == (8, 12) and q.is_regular() and q.is_connected()
    assert all(bin(u ^ v).count("1") == 1 for u, v in q.edges)


def test_relabel_keeps_structure():
    g = gr.cycle(5)
    h = g.relabel([4, 3, 2, 1, 0])
    assert h.m == 5 and h.is_regular()
