"""
Coloring a product one layer at a time
======================================

A Cartesian product G x P_n is n copies of G stacked into layers, with
"rungs" joining matching vertices of neighboring layers. Colorings of such
products are assembled from two layer colorings and two rung colors, used
alternately.
"""

from tndi import build, construct, FamilySpec
from tndi.coloring import shift_coloring, verify_proper_total, verify_sum_distinguishing, vertex_sums
from tndi.constructions import LayerPlan, color_cycle, compose_layers
from tndi.graph import layer, rung_edges

g = build(FamilySpec.parse("C4xP3"))
print(g.name, "has", g.n, "vertices;", "layer 2 is", layer(g, 2), "and rung set 1 is", rung_edges(g, 1))

# Start from a 4-coloring of C4 and its rotation by one color.
top = color_cycle(4)
bottom = shift_coloring(top, 1, 4)

# Giving both rung sets the same color fails at once: the two rungs meeting at
# a middle-layer vertex share a color.
same = compose_layers(g, LayerPlan(top, bottom, 5, 5))
print("same rung colors:", [v.kind for v in verify_proper_total(g, same).violations][:3], "...")

# Alternating rung colors 5 and 6 fixes properness, and the sums separate.
plan = LayerPlan(top, bottom, 5, 6)
c = compose_layers(g, plan)
print("alternating rungs proper:", verify_proper_total(g, c).ok)
print("sums by layer:", [vertex_sums(g, c)[i : i + 4] for i in range(0, 12, 4)])
print("distinguishing:", verify_sum_distinguishing(g, c).ok, "with", c.k, "colors")

# The library's own cylinder coloring uses the same idea, with colors chosen
# so that it also works for every length.
for n in (2, 3, 6):
    spec = FamilySpec.parse(f"C5xP{n}")
    print(spec.label, "->", construct(spec).k, "colors; Δ =", build(spec).max_degree)
