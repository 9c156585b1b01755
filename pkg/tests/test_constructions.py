from __future__ import annotations

import pytest

from tndi import constructions as cons
from tndi import graph as gr
from tndi.coloring import (
    TotalColoring,
    color_sets,
    colors_used,
    shift_coloring,
    verify_proper_total,
    verify_sum_distinguishing,
    vertex_sums,
)
from tndi.graph import FamilySpec


def check(label: str) -> TotalColoring:
    spec = FamilySpec.parse(label)
    g = gr.build(spec)
    c = cons.construct(spec)
    assert verify_proper_total(g, c).ok, label
    assert verify_sum_distinguishing(g, c).ok, label
    assert colors_used(c) == c.k == cons.claimed_colors(spec), label
    return c


def test_residue_uses_one_based_system():
    assert [cons.residue(x, 3) for x in range(-1, 5)] == [2, 3, 1, 2, 3, 1]


class TestSingleFamilies:
    def test_star_base(self):
        g, c = gr.star(3), cons.color_star(3)
        assert vertex_sums(g, c) == [10, 3, 3, 4]
        assert c.k == 4

    def test_star_shifted(self):
        c = cons.color_star(3, "shifted")
        assert verify_sum_distinguishing(gr.star(3), c).ok
        assert c.vertices[0] == 1

    def test_s2_is_p3(self):
        c = cons.color_star(2)
        assert c.k == 3 and verify_sum_distinguishing(gr.star(2), c).ok

    @pytest.mark.parametrize("m, k", [(3, 5), (4, 5), (5, 6), (6, 7), (7, 8)])
    def test_wheel(self, m, k):
        g, c = gr.wheel(m), cons.color_wheel(m)
        assert c.k == k
        assert verify_sum_distinguishing(g, c).ok

    def test_wheel_shifted(self):
        for m in (4, 5, 6):
            assert verify_sum_distinguishing(gr.wheel(m), cons.color_wheel(m, "shifted")).ok

    def test_complete_even(self):
        c = cons.color_complete(6)
        assert c.vertices == (2, 4, 6, 1, 3, 5) and c.k == 7
        sets = color_sets(gr.complete(6), c)
        assert sets == [frozenset(range(1, 8)) - {i} for i in range(1, 7)]

    def test_complete_odd(self):
        c = cons.color_complete(5)
        assert c.vertices == (3, 5, 7, 2, 4) and c.k == 7
        sets = color_sets(gr.complete(5), c)
        assert sets == [frozenset(range(1, 8)) - {i, i + 1} for i in range(1, 6)]

    def test_k2(self):
        assert cons.color_complete(2).k == 3

    @pytest.mark.parametrize("n, k", [(2, 3), (3, 3), (4, 4), (9, 4)])
    def test_path(self, n, k):
        assert check(f"P{n}").k == k

    @pytest.mark.parametrize("n, k", [(3, 5), (4, 4), (5, 4), (10, 4)])
    def test_cycle(self, n, k):
        assert check(f"C{n}").k == k


class TestComposeLayers:
    def test_single_layer_returns_odd_layer(self):
        base = cons.color_cycle(4)
        g = gr.cartesian_product(gr.cycle(4), gr.path(1))
        plan = cons.LayerPlan(base, base, 9, 9)
        assert cons.compose_layers(g, plan) == base

    def test_identical_rungs_break_properness(self):
        g = gr.build(FamilySpec.parse("C4xP3"))
        top = cons.color_cycle(4)
        bottom = shift_coloring(top, 1, 4)
        plan = cons.LayerPlan(top, bottom, 5, 5)
        kinds = {v.kind for v in verify_proper_total(g, cons.compose_layers(g, plan)).violations}
        assert kinds == {"edge-edge"}
        fixed = cons.LayerPlan(top, bottom, 5, 6)
        assert verify_proper_total(g, cons.compose_layers(g, fixed)).ok

    def test_identical_layers_clash_across_rungs(self):
        g = gr.build(FamilySpec.parse("C4xP2"))
        top = cons.color_cycle(4)
        verdict = verify_proper_total(g, cons.compose_layers(g, cons.LayerPlan(top, top, 5, 5)))
        assert {v.kind for v in verdict.violations} == {"vertex-vertex"}

    def test_rung_list_length_checked(self):
        g = gr.build(FamilySpec.parse("C4xP2"))
        top = cons.color_cycle(4)
        with pytest.raises(ValueError, match="rung color list"):
            cons.compose_layers(g, cons.LayerPlan(top, top, [5, 5], 5))

    def test_layer_size_checked(self):
        g = gr.build(FamilySpec.parse("C4xP2"))
        with pytest.raises(ValueError, match="layer coloring"):
            cons.compose_layers(g, cons.LayerPlan(cons.color_cycle(5), cons.color_cycle(5), 6, 6))

    def test_needs_product(self):
        with pytest.raises(gr.NotAProductError):
            cons.compose_layers(gr.cycle(4), cons.LayerPlan(cons.color_cycle(4), cons.color_cycle(4), 5, 6))

    def test_grid_four_by_four(self):
        assert check("P4xP4").k == 6


def test_transpose_is_an_isomorphism():
    c = cons.color_grid(5, 3)
    t = cons.transpose_coloring(c, 5, 3)
    g = gr.build(FamilySpec.parse("P3xP5"))
    assert verify_sum_distinguishing(g, t).ok
    assert sorted(vertex_sums(g, t)) == sorted(vertex_sums(gr.build(FamilySpec.parse("P5xP3")), c))


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3)])
def test_embedded_grid_tables(m, n):
    spec = FamilySpec.parse(f"P{m}xP{n}")
    c = cons.grid_table(m, n)
    assert verify_sum_distinguishing(gr.build(spec), c).ok
    assert c.k == cons.claimed_colors(spec)


@pytest.mark.parametrize(
    "label, k",
    [
        ("P3xP3", 5), ("P2xP3", 5), ("P5xP4", 6), ("P7xP2", 5),
        ("C3xP2", 5), ("C4xP2", 5), ("C5xP4", 6), ("C3xP5", 6),
        ("S4xP3", 7), ("S2xP3", 5), ("S3xP5", 7), ("S3xP2", 6),
        ("K4xP2", 6), ("K3xP3", 6), ("K2xP2", 4), ("K5xP4", 8),
        ("W4xP3", 7), ("W3xP2", 6), ("W5xP4", 9),
        ("W4xC4", 8), ("W3xC4", 7), ("W4xC5", 8), ("W3xC3", 7),
        ("S3xC4", 7), ("S2xC3", 6), ("S2xC5", 6),
        ("C4xC4", 6), ("C5xC5", 6), ("C3xC4", 6), ("C4xC5", 6), ("C3xC3", 6),
    ],
)
def test_product_constructions(label, k):
    assert check(label).k == k


def test_wrap_rung_color_present():
    spec = FamilySpec.parse("W3xC4")
    g, c = gr.build(spec), cons.construct(spec)
    wrap = [c.edge_color(u, v) for u, v in gr.rung_edges(g, 4)]
    assert max(wrap) == c.k == 7


def test_large_wheel():
    assert check("W7").k == 8


def test_unsupported_family():
    with pytest.raises(cons.UnsupportedFamilyError, match="supported"):
        cons.construct(FamilySpec.parse("K3,3"))


def test_out_of_range_parameters():
    with pytest.raises(gr.ParameterError):
        cons.color_wheel(2)
    with pytest.raises(gr.ParameterError):
        cons.color_torus(2, 4)
