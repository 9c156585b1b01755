from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tndi import graph as gr
from tndi.coloring import (
    TotalColoring,
    color_sets,
    verify_proper_total,
    verify_set_distinguishing,
    verify_sum_distinguishing,
    vertex_sums,
)
from tndi.graph import FamilySpec, Graph
from tndi.solver import (
    DEFAULT_BUDGET,
    NoSolutionError,
    SearchTimeout,
    feasible,
    lower_bound,
    resolve_budget,
    solve_exact,
    solve_vertex_chromatic,
)


def brute_force_min(g: Graph, mode: str, k_max: int) -> int | None:
    """Enumerate every assignment; only usable for a handful of elements."""
    n = g.n
    for k in range(1, k_max + 1):
        for combo in itertools.product(range(1, k + 1), repeat=n + g.m):
            c = TotalColoring(k, combo[:n], dict(zip(g.edges, combo[n:])))
            if not verify_proper_total(g, c).ok:
                continue
            values = vertex_sums(g, c) if mode == "sums" else color_sets(g, c)
            if all(values[u] != values[v] for u, v in g.edges):
                return k
    return None


@st.composite
def tiny_connected_graphs(draw, max_elements: int = 7) -> Graph:
    n = draw(st.integers(2, 4))
    order = draw(st.permutations(range(n)))
    edges = {tuple(sorted((order[i], order[draw(st.integers(0, i - 1))]))) for i in range(1, n)}
    extra = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    for e in draw(st.lists(st.sampled_from(extra), unique=True)) if extra else []:
        if n + len(edges) < max_elements:
            edges.add(e)
    return Graph("tiny", n, sorted(edges))


@st.composite
def small_connected_graphs(draw) -> Graph:
    n = draw(st.integers(2, 6))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = list(itertools.combinations(range(n), 2))
    edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=5)))
    return Graph("small", n, sorted(edges))


class TestLowerBound:
    @pytest.mark.parametrize("label, lb", [("P4", 4), ("S3", 4), ("C3xP2", 5), ("P3", 3), ("K5", 6)])
    def test_values(self, label, lb):
        assert lower_bound(gr.build(FamilySpec.parse(label))) == lb


class TestFeasible:
    def test_c3_needs_five(self):
        c3 = gr.cycle(3)
        assert feasible(c3, 4) is None
        witness = feasible(c3, 5)
        assert witness is not None and verify_sum_distinguishing(c3, witness).ok

    def test_p2_uses_all_three(self):
        w = feasible(gr.path(2), 3)
        assert set(w.vertices) | set(w.edges.values()) == {1, 2, 3}

    def test_fixed_elements_are_respected(self):
        g = gr.path(3)
        w = feasible(g, 3, fixed={1: 3, g.n: 1})
        assert w.vertices[1] == 3 and w.edge_color(0, 1) == 1
        assert feasible(g, 3, fixed={0: 1, g.n: 1}) is None

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            feasible(gr.path(2), 0)

    def test_budget_exhaustion(self):
        with pytest.raises(SearchTimeout) as info:
            feasible(gr.complete(5), 6, budget=50)
        assert info.value.nodes_explored > 50


class TestSolveExact:
    @pytest.mark.parametrize("label, k", [("K5", 7), ("P3xP3", 5), ("Q3", 5), ("C3", 5), ("W4", 5)])
    def test_values(self, label, k):
        g = gr.build(FamilySpec.parse(label))
        r = solve_exact(g, "sums")
        assert r.min_k == k
        assert r.witness.k == k and verify_sum_distinguishing(g, r.witness).ok

    def test_no_solution_below_k_max(self):
        with pytest.raises(NoSolutionError) as info:
            solve_exact(gr.cycle(3), "sums", 4)
        assert info.value.k_max == 4

    def test_k_max_below_bound_rejected(self):
        with pytest.raises(ValueError):
            solve_exact(gr.path(4), "sums", 3)

    def test_unknown_mode(self):
        with pytest.raises(ValueError, match="mode"):
            solve_exact(gr.path(2), "colors")

    def test_to_json_shape(self):
        data = solve_exact(gr.path(3)).to_json()
        assert data["min_k"] == 3 and data["mode"] == "sums"
        assert set(data["witness"]) == {"k", "vertices", "edges"}

    def test_vertex_mode(self):
        r = solve_exact(gr.complete(4), "vertex")
        assert r.min_k == 4 and r.witness.edges == {}

    def test_threads_do_not_change_the_answer(self):
        g = gr.build(FamilySpec.parse("C3xP2"))
        one = solve_exact(g, threads=1)
        four = solve_exact(g, threads=4)
        assert one.to_json() == four.to_json()


class TestVertexChromatic:
    def test_k4(self):
        assert solve_vertex_chromatic(gr.complete(4), 4)
        assert not solve_vertex_chromatic(gr.complete(4), 3)

    def test_w5_and_c5(self):
        assert solve_vertex_chromatic(gr.wheel(5), 4)
        assert not solve_vertex_chromatic(gr.wheel(5), 3)
        assert solve_vertex_chromatic(gr.cycle(5), 3)


def test_budget_resolution(monkeypatch):
    monkeypatch.delenv("TNDI_BUDGET", raising=False)
    assert resolve_budget() == DEFAULT_BUDGET
    monkeypatch.setenv("TNDI_BUDGET", "1234")
    assert resolve_budget() == 1234
    assert resolve_budget(99) == 99


@settings(max_examples=25, deadline=None)
@given(tiny_connected_graphs())
def test_sums_mode_matches_brute_force(g):
    assert solve_exact(g, "sums").min_k == brute_force_min(g, "sums", g.max_degree + 3)


@settings(max_examples=25, deadline=None)
@given(tiny_connected_graphs())
def test_sets_mode_matches_brute_force(g):
    assert solve_exact(g, "sets").min_k == brute_force_min(g, "sets", g.max_degree + 3)


@settings(max_examples=30, deadline=None)
@given(small_connected_graphs())
def test_witnesses_verify_and_modes_are_ordered(g):
    sums = solve_exact(g, "sums")
    sets = solve_exact(g, "sets")
    assert verify_sum_distinguishing(g, sums.witness).ok
    assert verify_set_distinguishing(g, sets.witness).ok
    assert sets.min_k <= sums.min_k
    assert lower_bound(g) <= sums.min_k <= g.max_degree + 3


@settings(max_examples=20, deadline=None)
@given(small_connected_graphs())
def test_feasibility_is_monotone(g):
    k = solve_exact(g, "sums").min_k
    assert feasible(g, k + 1) is not None
    if k - 1 >= 1:
        assert feasible(g, k - 1) is None
