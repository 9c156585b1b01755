from __future__ import annotations

import pytest

from tndi import constructions as cons
from tndi import graph as gr
from tndi.coloring import (
    CoverageError,
    ImproperColoringError,
    TotalColoring,
    color_sets,
    colors_used,
    shift_coloring,
    verify_proper_total,
    verify_set_distinguishing,
    verify_sum_distinguishing,
    vertex_sum,
    vertex_summary,
    vertex_sums,
)


def p2(u=1, v=2, e=3):
    return gr.path(2), TotalColoring(3, (u, v), {(0, 1): e})


def c4_alternating():
    g = gr.cycle(4)
    edges = {(0, 1): 3, (1, 2): 4, (2, 3): 3, (0, 3): 4}
    return g, TotalColoring(4, (1, 2, 1, 2), edges)


def test_vertex_sum_on_p2():
    g, c = p2()
    assert [vertex_sum(g, c, v) for v in range(2)] == [4, 5]
    assert verify_sum_distinguishing(g, c).ok


def test_summary_matches_sum_and_set():
    g = gr.complete(6)
    c = cons.color_complete(6)
    for v in range(g.n):
        s = vertex_summary(g, c, v)
        assert s.sum == sum(s.own_set)
        assert len(s.own_set) == g.degrees[v] + 1


def test_complete_sums_follow_closed_forms():
    assert vertex_sums(gr.complete(6), cons.color_complete(6)) == [27, 26, 25, 24, 23, 22]
    assert vertex_sums(gr.complete(5), cons.color_complete(5)) == [25, 23, 21, 19, 17]


def test_one_coloring_of_p2_is_improper():
    g, c = p2(1, 1, 1)
    verdict = verify_proper_total(g, c)
    assert not verdict.ok
    assert {v.kind for v in verdict.violations} == {"vertex-vertex", "vertex-edge"}


def test_violations_are_exhaustive():
    g = gr.star(3)
    c = TotalColoring(4, (4, 1, 1, 1), {(0, 1): 1, (0, 2): 1, (0, 3): 2})
    kinds = [v.kind for v in verify_proper_total(g, c).violations]
    assert kinds.count("vertex-edge") == 2
    assert kinds.count("edge-edge") == 1


def test_square_table_and_single_mutation():
    g = gr.build(gr.FamilySpec.parse("P2xP2"))
    c = cons.grid_table(2, 2)
    assert verify_proper_total(g, c).ok
    assert vertex_sums(g, c) == [8, 9, 9, 7]
    # vertex 0 takes the color of its rung, clashing with nothing else
    broken = TotalColoring(c.k, (4,) + c.vertices[1:], c.edges)
    verdict = verify_proper_total(g, broken)
    assert [v.kind for v in verdict.violations] == ["vertex-edge"]


def test_c4_alternating_sums_and_sets():
    g, c = c4_alternating()
    assert vertex_sums(g, c) == [8, 9, 8, 9]
    assert verify_sum_distinguishing(g, c).ok
    assert verify_set_distinguishing(g, c).ok
    assert color_sets(g, c)[:2] == [frozenset({1, 3, 4}), frozenset({2, 3, 4})]


def test_sets_can_separate_what_sums_cannot():
    g = gr.path(3)
    c = TotalColoring(4, (3, 1, 3), {(0, 1): 4, (1, 2): 2})
    assert vertex_sums(g, c)[:2] == [7, 7]
    assert not verify_sum_distinguishing(g, c).ok
    assert verify_set_distinguishing(g, c).ok


def test_distinguishing_checks_refuse_improper_input():
    g, c = p2(1, 1, 2)
    with pytest.raises(ImproperColoringError) as info:
        verify_sum_distinguishing(g, c)
    assert info.value.verdict.violations
    with pytest.raises(ImproperColoringError):
        verify_set_distinguishing(g, c)


def test_coverage_errors_are_not_violations():
    g = gr.path(3)
    with pytest.raises(CoverageError):
        verify_proper_total(g, TotalColoring(3, (1, 2, 1), {(0, 1): 3}))
    with pytest.raises(CoverageError):
        verify_proper_total(g, TotalColoring(3, (1, 2, 1), {(0, 1): 3, (1, 2): 9}))
    with pytest.raises(CoverageError):
        verify_proper_total(g, TotalColoring(3, (1, 2), {(0, 1): 3, (1, 2): 1}))


def test_shift():
    c = cons.color_star(3)
    assert shift_coloring(c, 0, c.k) == c
    top = TotalColoring(4, (4,), {})
    assert shift_coloring(top, 1, 4).vertices == (1,)
    with pytest.raises(ValueError):
        shift_coloring(c, 1, 3)
    shifted = shift_coloring(c, 1, 4)
    g = gr.star(3)
    assert verify_sum_distinguishing(g, shifted).ok


def test_extension_shift_grows_palette():
    c = cons.color_star(3)
    up = shift_coloring(c, 2)
    assert up.k == c.k + 2
    assert min(up.vertices) == min(c.vertices) + 2


def test_colors_used():
    assert colors_used(cons.color_complete(5)) == 7
    assert colors_used(p2()[1]) == 3
    assert colors_used(cons.grid_table(3, 3)) == 5


def test_json_round_trip():
    c = cons.color_wheel(5)
    data = c.to_json()
    assert list(data["edges"]) == sorted(data["edges"], key=lambda s: tuple(map(int, s.split("-"))))
    assert TotalColoring.from_json(data) == c
