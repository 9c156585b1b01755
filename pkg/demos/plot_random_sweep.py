"""
Random graphs and the Δ + 3 bound
=================================

Is every graph colorable with at most Δ + 3 colors so that adjacent
vertices get different sums? We sample small random connected graphs, solve
each one exactly and tally the classes.
"""

from collections import Counter

from tndi.classifier import conjecture_sweep

report = conjecture_sweep(200, 8, seed=1)
print(report.summary())

# Which graphs needed Δ + 3 colors?
heavy = [i for i in report.instances if i.get("class") == "III"]
print(Counter((i["n"], i["m"]) for i in heavy))

# Among the regular samples, the ones that disagree with the vertex-coloring
# criterion are triangles: class III, although three colors already suffice
# for their vertices.
for key in report.regular_disagreements[:3]:
    inst = next(i for i in report.instances if i["key"] == key)
    print(key, "edges", inst["edges"], "class", inst["class"])
