"""
Certifying a minimum by search
==============================

Constructions give upper bounds. When they do not meet the degree lower
bound, the exact solver settles the question by exhausting every smaller
palette.
"""

import time

from tndi import build, FamilySpec
from tndi.classifier import classify
from tndi.solver import feasible, lower_bound, solve_exact

# The triangle: Δ = 2, every vertex has maximum degree, so at least 4 colors.
c3 = build(FamilySpec.parse("C3"))
print("C3 bound", lower_bound(c3), "| 4 colors possible?", feasible(c3, 4) is not None)
print("C3 with 5 colors:", feasible(c3, 5))

# Odd complete graphs need Δ + 3. For K5 this means ruling out 6 colors,
# which is most of the work below.
k5 = build(FamilySpec.parse("K5"))
start = time.perf_counter()
r = solve_exact(k5)
print(f"K5: minimum {r.min_k} after {r.nodes_explored} nodes in {time.perf_counter() - start:.1f}s")

# Telling neighbors apart by color sets is a weaker demand than by sums, so
# the set version never needs more colors.
for label in ("C3", "K4", "P3xP3", "Q3"):
    g = build(FamilySpec.parse(label))
    print(label, "sums:", solve_exact(g, "sums").min_k, "sets:", solve_exact(g, "sets").min_k)

# classify() skips the search whenever a construction already meets the bound.
for label in ("W6", "S4xP3", "C5xC5", "K5"):
    v = classify(FamilySpec.parse(label))
    print(label, v.to_json())
