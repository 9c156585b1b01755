"""Total colorings whose vertex sums tell adjacent vertices apart."""

from __future__ import annotations

from .coloring import (
    TotalColoring,
    Verdict,
    Violation,
    color_sets,
    shift_coloring,
    verify_proper_total,
    verify_set_distinguishing,
    verify_sum_distinguishing,
    vertex_sums,
)
from .classifier import ClassVerdict, classify, conjecture_sweep, theorem_table
from .constructions import LayerPlan, compose_layers, construct
from .graph import FamilySpec, Graph, build, cartesian_product
from .solver import SolveResult, feasible, lower_bound, solve_exact

__version__ = "0.1.0"

__all__ = [
    "Graph", "FamilySpec", "build", "cartesian_product",
    "TotalColoring", "Verdict", "Violation", "color_sets", "vertex_sums", "shift_coloring",
    "verify_proper_total", "verify_sum_distinguishing", "verify_set_distinguishing",
    "LayerPlan", "compose_layers", "construct",
    "SolveResult", "feasible", "lower_bound", "solve_exact",
    "ClassVerdict", "classify", "conjecture_sweep", "theorem_table",
]
