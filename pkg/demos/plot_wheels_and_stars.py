"""
Sums that tell neighbors apart
==============================

A total coloring paints vertices and edges. Here we look at the sum at each
vertex (its own color plus the colors of its edges) for a star and a wheel,
and check that neighbors always end up with different sums.
"""

from tndi import build, construct, FamilySpec
from tndi.coloring import verify_sum_distinguishing, vertex_sums
from tndi.solver import lower_bound

# A star with three leaves. The hub is vertex 0.
spec = FamilySpec.parse("S3")
g = build(spec)
c = construct(spec)
print(spec.label, "vertex colors", c.vertices, "edge colors", c.edges)
print("sums", vertex_sums(g, c))

# The hub collects every edge color, so its sum dwarfs the leaves'. Two
# leaves may share a sum because leaves are never adjacent.
print("distinguishing:", verify_sum_distinguishing(g, c).ok)

# With Δ = 3 the hub alone has maximum degree, so the bound is Δ + 1 = 4,
# and the coloring uses exactly 4 colors.
print("lower bound", lower_bound(g), "colors", c.k)

# Wheels: the rim forms a cycle, so rim vertices are adjacent to each other
# and their sums must differ too.
for m in (4, 5, 6, 7):
    spec = FamilySpec.of("wheel", m)
    g, c = build(spec), construct(spec)
    sums = vertex_sums(g, c)
    print(f"W{m}: hub sum {sums[0]}, rim sums {sums[1:]}, {c.k} colors, Δ = {g.max_degree}")

# W3 is K4, where every vertex has degree 3. An edge joins two maximum-degree
# vertices, which pushes the bound up to Δ + 2.
g = build(FamilySpec.parse("W3"))
print("W3 bound", lower_bound(g), "colors", construct(FamilySpec.parse("W3")).k)
