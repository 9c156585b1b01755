"""Total colorings, the per-vertex sum and color set, and the verifiers.

Colors are the integers ``1..k``. The sum of a vertex is its own color plus
the colors of its incident edges; its color set collects the same colors.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Graph

__all__ = [
    "TotalColoring",
    "VertexSummary",
    "Violation",
    "Verdict",
    "CoverageError",
    "ImproperColoringError",
    "vertex_sum",
    "vertex_summary",
    "vertex_sums",
    "color_sets",
    "verify_proper_total",
    "verify_sum_distinguishing",
    "verify_set_distinguishing",
    "shift_coloring",
    "colors_used",
]


class CoverageError(ValueError):
    """The coloring misses an element of the graph or uses a color outside 1..k."""


class ImproperColoringError(ValueError):
    """Raised by the distinguishing checks when the coloring is not a proper
    total coloring; ``verdict`` holds the properness violations."""

    def __init__(self, verdict: "Verdict"):
        super().__init__(f"coloring is not proper: {len(verdict.violations)} violation(s)")
        self.verdict = verdict


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TotalColoring:
    k: int
    vertices: tuple[int, ...]
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("palette size k must be at least 1")
        object.__setattr__(self, "vertices", tuple(int(c) for c in self.vertices))
        object.__setattr__(
            self, "edges", {_canon(u, v): int(c) for (u, v), c in sorted(self.edges.items())}
        )

    def edge_color(self, u: int, v: int) -> int:
        return self.edges[_canon(u, v)]

    @classmethod
    def from_lists(cls, g: Graph, k: int, vertices, edge_colors) -> "TotalColoring":
        """Coloring whose edge colors follow ``g.edges`` order."""
        if len(edge_colors) != g.m:
            raise CoverageError(f"expected {g.m} edge colors, got {len(edge_colors)}")
        return cls(k, tuple(vertices), dict(zip(g.edges, edge_colors)))

    def edge_list(self, g: Graph) -> list[int]:
        return [self.edges[e] for e in g.edges]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertices": list(self.vertices),
            "edges": {f"{u}-{v}": c for (u, v), c in self.edges.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TotalColoring":
        edges = {}
        for key, c in data["edges"].items():
            u, v = (int(x) for x in key.split("-"))
            edges[(u, v)] = c
        return cls(int(data["k"]), tuple(data["vertices"]), edges)


class VertexSummary(NamedTuple):
    sum: int
    own_set: frozenset[int]


class Violation(NamedTuple):
    kind: str  # vertex-vertex | edge-edge | vertex-edge | sum | set
    first: object
    second: object


@dataclass
class Verdict:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _check_coverage(g: Graph, c: TotalColoring) -> None:
    if len(c.vertices) != g.n:
        raise CoverageError(f"{len(c.vertices)} vertex colors for {g.n} vertices")
    missing = [e for e in g.edges if e not in c.edges]
    if missing:
        raise CoverageError(f"no color for edge(s) {missing[:5]}")
    extra = set(c.edges) - set(g.edge_index)
    if extra:
        raise CoverageError(f"colors given for non-edges {sorted(extra)[:5]}")
    for x in list(c.vertices) + list(c.edges.values()):
        if not 1 <= x <= c.k:
            raise CoverageError(f"color {x} outside 1..{c.k}")


def vertex_sum(g: Graph, c: TotalColoring, v: int) -> int:
    try:
        return c.vertices[v] + sum(c.edges[_canon(v, w)] for w in g.adjacency[v])
    except (KeyError, IndexError) as exc:
        raise CoverageError(f"missing color around vertex {v}") from exc


def vertex_summary(g: Graph, c: TotalColoring, v: int) -> VertexSummary:
    own = [c.vertices[v]] + [c.edges[_canon(v, w)] for w in g.adjacency[v]]
    return VertexSummary(sum(own), frozenset(own))


def vertex_sums(g: Graph, c: TotalColoring) -> list[int]:
    sums = list(c.vertices)
    for (u, v), col in c.edges.items():
        sums[u] += col
        sums[v] += col
    return sums


def color_sets(g: Graph, c: TotalColoring) -> list[frozenset[int]]:
    sets: list[set[int]] = [{x} for x in c.vertices]
    for (u, v), col in c.edges.items():
        sets[u].add(col)
        sets[v].add(col)
    return [frozenset(s) for s in sets]


def verify_proper_total(g: Graph, c: TotalColoring) -> Verdict:
    """All clashes between adjacent vertices, adjacent edges, and an edge and
    its endpoints. Every violating pair is reported."""
    _check_coverage(g, c)
    out: list[Violation] = []
    vc = c.vertices
    seen: list[dict[int, tuple[int, int]]] = [{} for _ in range(g.n)]
    for e in g.edges:
        u, v = e
        if vc[u] == vc[v]:
            out.append(Violation("vertex-vertex", u, v))
        col = c.edges[e]
        if col == vc[u]:
            out.append(Violation("vertex-edge", u, e))
        if col == vc[v]:
            out.append(Violation("vertex-edge", v, e))
        for w in e:
            first = seen[w].setdefault(col, e)
            if first is not e:
                out.append(Violation("edge-edge", first, e))
    return Verdict(not out, out)


def _require_proper(g: Graph, c: TotalColoring) -> None:
    verdict = verify_proper_total(g, c)
    if not verdict.ok:
        raise ImproperColoringError(verdict)


def verify_sum_distinguishing(g: Graph, c: TotalColoring) -> Verdict:
    """Adjacent vertices get different sums. Raises ImproperColoringError
    when ``c`` is not a proper total coloring."""
    _require_proper(g, c)
    sums = vertex_sums(g, c)
    out = [Violation("sum", u, v) for u, v in g.edges if sums[u] == sums[v]]
    return Verdict(not out, out)


def verify_set_distinguishing(g: Graph, c: TotalColoring) -> Verdict:
    _require_proper(g, c)
    sets = color_sets(g, c)
    out = [Violation("set", u, v) for u, v in g.edges if sets[u] == sets[v]]
    return Verdict(not out, out)


def shift_coloring(c: TotalColoring, delta: int, modulus: int | None = None) -> TotalColoring:
    """Add ``delta`` to every color.

    With a modulus the result is reduced into ``1..modulus`` and the palette
    becomes ``modulus``; without one the palette grows by ``delta``.
    """
    if modulus is None:
        if min(c.vertices + tuple(c.edges.values()), default=1) + delta < 1:
            raise ValueError("shift would produce colors below 1")
        return TotalColoring(
            c.k + delta,
            tuple(x + delta for x in c.vertices),
            {e: x + delta for e, x in c.edges.items()},
        )
    top = max(c.vertices + tuple(c.edges.values()), default=1)
    if modulus < top:
        raise ValueError(f"modulus {modulus} below the largest color {top}")

    def f(x: int) -> int:
        return (x + delta - 1) % modulus + 1

    return TotalColoring(
        modulus, tuple(f(x) for x in c.vertices), {e: f(x) for e, x in c.edges.items()}
    )


def colors_used(c: TotalColoring) -> int:
    return len(set(c.vertices) | set(c.edges.values()))
