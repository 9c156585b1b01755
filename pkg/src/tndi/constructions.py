"""Explicit sum-distinguishing total colorings for the named families.

Every product colorer here is a layer plan: one coloring of the first factor
for odd layers, another for even layers, and a rung color (or one color per
factor vertex) for each parity of rung set, with a few per-layer or per-rung
overrides where a family needs them. :func:`compose_layers` turns a plan into a
coloring of the product.

All modular arithmetic takes representatives in ``1..n`` rather than ``0..n-1``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from . import graph as gr
from .coloring import TotalColoring, shift_coloring
from .graph import FamilySpec, Graph, ParameterError

__all__ = [
    "LayerPlan",
    "UnsupportedFamilyError",
    "compose_layers",
    "transpose_coloring",
    "color_path",
    "color_cycle",
    "color_star",
    "color_wheel",
    "color_complete",
    "color_grid",
    "color_cylinder",
    "color_star_prism",
    "color_complete_prism",
    "color_wheel_prism",
    "color_wheel_torus",
    "color_star_torus",
    "color_torus",
    "construct",
    "claimed_colors",
    "SUPPORTED",
]


class UnsupportedFamilyError(ValueError):
    pass


def residue(x: int, n: int) -> int:
    """``x mod n`` in the system ``1..n``."""
    return (x - 1) % n + 1


RungColors = int | Sequence[int]


@dataclass
class LayerPlan:
    odd_layer: TotalColoring
    even_layer: TotalColoring
    odd_rungs: RungColors
    even_rungs: RungColors
    layer_overrides: dict[int, TotalColoring] = field(default_factory=dict)
    rung_overrides: dict[int, RungColors] = field(default_factory=dict)


def _rung_list(colors: RungColors, s: int) -> list[int]:
    if isinstance(colors, int):
        return [colors] * s
    colors = list(colors)
    if len(colors) != s:
        raise ValueError(f"rung color list has {len(colors)} entries, factor has {s} vertices")
    return colors


def compose_layers(product: Graph, plan: LayerPlan) -> TotalColoring:
    """Color layer ``i`` by the odd or even layer coloring and rung set ``i``
    by the odd or even rung colors, according to the parity of ``i``.

    Overrides are keyed by the 1-based layer or rung index and applied last.
    When the second factor is a cycle, the wrap-around rung set is number
    ``layers`` and follows the same parity rule unless overridden.
    """
    meta = product.product
    if meta is None:
        raise gr.NotAProductError(f"{product.name} is not a product graph")
    l, s = meta.layers, meta.layer_size
    for col in (plan.odd_layer, plan.even_layer, *plan.layer_overrides.values()):
        if len(col.vertices) != s:
            raise ValueError(
                f"layer coloring has {len(col.vertices)} vertices, layers have {s}"
            )
    vertices = [0] * product.n
    edges: dict[tuple[int, int], int] = {}
    for i in range(1, l + 1):
        col = plan.layer_overrides.get(i, plan.odd_layer if i % 2 else plan.even_layer)
        base = (i - 1) * s
        vertices[base : base + s] = col.vertices
        for (a, b), c in col.edges.items():
            edges[(base + a, base + b)] = c
    n_rungs = l if (l >= 3 and product.has_edge(0, (l - 1) * s)) else l - 1
    for i in range(1, n_rungs + 1):
        spec = plan.rung_overrides.get(i, plan.odd_rungs if i % 2 else plan.even_rungs)
        lo, hi = (i - 1) * s, (i % l) * s
        for j, c in enumerate(_rung_list(spec, s)):
            u, v = lo + j, hi + j
            edges[(u, v) if u < v else (v, u)] = c
    k = max(vertices + list(edges.values()))
    result = TotalColoring(k, tuple(vertices), edges)
    if set(result.edges) != set(product.edges):
        raise ValueError("plan does not cover the product's edges")
    return result


def transpose_coloring(c: TotalColoring, s: int, l: int) -> TotalColoring:
    """Carry a coloring of ``G x H`` (layer size ``s``, ``l`` layers) over to
    ``H x G`` through the isomorphism ``(v_j, w_i) -> (w_i, v_j)``."""

    def t(x: int) -> int:
        i, j = divmod(x, s)
        return j * l + i

    vertices = [0] * (s * l)
    for x, col in enumerate(c.vertices):
        vertices[t(x)] = col
    return TotalColoring(c.k, tuple(vertices), {(t(u), t(v)): col for (u, v), col in c.edges.items()})


def _relabel(c: TotalColoring, perm: Sequence[int]) -> TotalColoring:
    vertices = [0] * len(perm)
    for x, col in enumerate(c.vertices):
        vertices[perm[x]] = col
    return TotalColoring(c.k, tuple(vertices), {(perm[u], perm[v]): col for (u, v), col in c.edges.items()})


def _check_min(name: str, **params: int) -> None:
    lows = {"m": 2, "n": 2}
    lows.update(_LOWS.get(name, {}))
    for key, value in params.items():
        if value < lows[key]:
            raise ParameterError(f"{name} requires {key} >= {lows[key]}, got {key}={value}")


_LOWS = {
    "color_path": {"n": 2},
    "color_cycle": {"n": 3},
    "color_wheel": {"m": 3},
    "color_cylinder": {"m": 3},
    "color_wheel_prism": {"m": 3},
    "color_wheel_torus": {"m": 3, "n": 3},
    "color_star_torus": {"n": 3},
    "color_torus": {"m": 3, "n": 3},
}


# paths and cycles ----------------------------------------------------------


def _chain(n, k, start, state, closing=None):
    """Colors ``(x_i, e_i)`` for positions ``start..n-1`` of a path or cycle
    by depth-first search with an explicit stack.

    ``state`` is ``(x_prev, e_prev, f_prev)``: the previous vertex color, the
    edge into position ``start`` and the settled sum one step back. For a
    cycle, ``closing = (x0, e_last, e0, f0)`` constrains the final vertex
    against the first one. Dead states are memoized, so for fixed ``k`` the
    work is linear in ``n``.
    """

    def options(i, x_prev, e_prev, f_prev):
        last = i == n - 1
        if not last:
            edges = range(1, k + 1)
        else:
            edges = (0,) if closing is None else (closing[1],)
        for x in range(1, k + 1):
            if x in (x_prev, e_prev) or (last and closing and x == closing[0]):
                continue
            for e in edges:
                if e and e in (x, e_prev):
                    continue
                f = x + e_prev + e
                if f == f_prev:
                    continue
                if last and closing and (e == closing[2] or f == closing[3]):
                    continue
                yield x, e, f

    dead: set = set()
    out: list[tuple[int, int]] = []
    keys = [(start, *state)]
    stack = [options(start, *state)]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            dead.add(keys.pop())
            stack.pop()
            if out:
                out.pop()
            continue
        x, e, f = step
        out.append((x, e))
        if len(out) == n - start:
            return out
        key = (start + len(out), x, e, f)
        if key in dead:
            out.pop()
            continue
        keys.append(key)
        stack.append(options(*key))
    return None


def _path_walk(n: int, k: int) -> TotalColoring | None:
    """Sum-distinguishing total k-coloring of ``P_n``, left to right."""
    out = _chain(n, k, 0, (0, 0, None))
    if out is None:
        return None
    return TotalColoring(
        k, tuple(x for x, _ in out), {(i, i + 1): out[i][1] for i in range(n - 1)}
    )


def _cycle_walk(n: int, k: int) -> TotalColoring | None:
    """Same search for ``C_n`` with the first vertex and both its edges fixed
    up front, so the closing vertex can be checked against them."""
    for x0 in range(1, k + 1):
        for e_last in range(1, k + 1):
            for e0 in range(1, k + 1):
                if len({x0, e_last, e0}) < 3:
                    continue
                f0 = x0 + e_last + e0
                tail = _chain(n, k, 1, (x0, e0, f0), (x0, e_last, e0, f0))
                if tail is None:
                    continue
                out = [(x0, e0)] + tail
                edges = {}
                for i, (_, e) in enumerate(out):
                    a, b = i, (i + 1) % n
                    edges[(min(a, b), max(a, b))] = e
                return TotalColoring(k, tuple(x for x, _ in out), edges)
    return None


def color_path(n: int) -> TotalColoring:
    """P_n with 3 colors for n <= 3 and 4 colors otherwise."""
    _check_min("color_path", n=n)
    k = 3 if n <= 3 else 4
    c = _path_walk(n, k) if n > 1 else TotalColoring(1, (1,), {})
    assert c is not None
    return c


def color_cycle(n: int) -> TotalColoring:
    """C_n with 5 colors for the triangle and 4 otherwise."""
    _check_min("color_cycle", n=n)
    k = 5 if n == 3 else 4
    c = _cycle_walk(n, k)
    assert c is not None
    return c


# stars, wheels, complete graphs --------------------------------------------


def color_star(m: int, variant: str = "base") -> TotalColoring:
    """S_m with ``m + 1`` colors: edge to leaf ``i`` gets ``i``, the hub
    ``m + 1``, the leaf on edge 1 gets 2 and the other leaves 1. The shifted
    variant adds 1 modulo ``m + 1``."""
    _check_min("color_star", m=m)
    vertices = [m + 1, 2] + [1] * (m - 1)
    edges = {(0, i): i for i in range(1, m + 1)}
    c = TotalColoring(m + 1, tuple(vertices), edges)
    return _variant(c, variant, m + 1)


def _variant(c: TotalColoring, variant: str, modulus: int) -> TotalColoring:
    if variant == "base":
        return c
    if variant == "shifted":
        return shift_coloring(c, 1, modulus)
    raise ValueError(f"variant must be 'base' or 'shifted', got {variant!r}")


# W_4, rim 1..4 clockwise from the top-left corner
_W4_TABLE = {
    "vertices": (5, 1, 3, 1, 2),
    "spokes": (2, 1, 4, 3),
    "rim": {(1, 2): 5, (2, 3): 2, (3, 4): 5, (1, 4): 4},
}


def color_wheel(m: int, variant: str = "base") -> TotalColoring:
    """W_m with ``m + 1`` colors for ``m >= 4`` and 5 colors for W_3 = K_4."""
    _check_min("color_wheel", m=m)
    if m == 3:
        return _variant(color_complete(4), variant, 5)
    if m == 4:
        t = _W4_TABLE
        edges = {(0, i): t["spokes"][i - 1] for i in range(1, 5)}
        edges.update(t["rim"])
        c = TotalColoring(5, t["vertices"], edges)
    elif m % 2:
        h = (m - 1) // 2
        vertices = [m + 1] + [i + 1 for i in range(1, m)] + [1]
        edges = {(0, i): i for i in range(1, m + 1)}
        edges[(1, m)] = h + 1
        for i in range(1, m):
            edges[(i, i + 1)] = residue(h + 1 + i, m)
        c = TotalColoring(m + 1, tuple(vertices), edges)
    else:
        # rim p_0 .. p_{m-1} is vertex 1 .. m; p_0 gets color 1, p_j color j+1
        vertices = [m + 1] + [j + 1 for j in range(m)]
        edges = {(0, 1): m}
        edges.update({(0, j + 1): j for j in range(1, m)})
        for j in range(m - 1):
            edges[(j + 1, j + 2)] = j + 3
        edges[(1, m)] = 2
        c = TotalColoring(m + 1, tuple(vertices), edges)
    return _variant(c, variant, m + 1)


def color_complete(m: int) -> TotalColoring:
    """K_m with ``m + 1`` colors (m even) or ``m + 2`` colors (m odd).

    With ``v_i`` the vertex at index ``i - 1``: for even m, ``v_i`` gets
    ``2i`` and edge ``v_i v_j`` gets ``i + j`` modulo ``m + 1``, so each vertex
    misses exactly the color ``i``. For odd m the rules are ``2i + 1`` and
    ``i + j + 1`` modulo ``m + 2`` and the missing colors are ``i, i + 1``.
    """
    if m < 2:
        raise ParameterError(f"color_complete requires m >= 2, got m={m}")
    off, mod = (0, m + 1) if m % 2 == 0 else (1, m + 2)
    vertices = tuple(residue(2 * i + off, mod) for i in range(1, m + 1))
    edges = {
        (i - 1, j - 1): residue(i + j + off, mod)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
    }
    return TotalColoring(mod, vertices, edges)


# products with a path --------------------------------------------------------

_GRID_TABLES = {
    # P_2 x P_2 as drawn: top row is layer 1
    (2, 2): ((1, 2, 3, 1), {(0, 1): 3, (2, 3): 2, (0, 2): 4, (1, 3): 4}),
    # P_2 x P_3: three rows of two
    (2, 3): (
        (1, 2, 3, 1, 2, 3),
        {(0, 1): 3, (2, 3): 4, (4, 5): 1, (0, 2): 2, (1, 3): 5, (2, 4): 5, (3, 5): 2},
    ),
    # P_3 x P_3
    (3, 3): (
        (1, 2, 3, 2, 3, 1, 1, 2, 3),
        {
            (0, 1): 3, (1, 2): 1, (3, 4): 1, (4, 5): 2, (6, 7): 3, (7, 8): 1,
            (0, 3): 4, (1, 4): 4, (2, 5): 4, (3, 6): 5, (4, 7): 5, (5, 8): 5,
        },
    ),
}


def grid_table(m: int, n: int) -> TotalColoring:
    vertices, edges = _GRID_TABLES[(m, n)]
    return TotalColoring(max(vertices + tuple(edges.values())), vertices, edges)


def _path_ladder_layers(m: int) -> tuple[TotalColoring, TotalColoring]:
    """The two layer colorings of P_m x P_2, m >= 3."""
    top_v = tuple(1 if j % 2 == 0 else 3 for j in range(m))
    top_e = {(j, j + 1): 2 if j % 2 == 0 else 4 for j in range(m - 1)}
    bot_e = {(j, j + 1): 4 if j % 2 == 0 else 2 for j in range(m - 1)}
    bot_v = [2] + [1 if j % 2 == 1 else 3 for j in range(1, m - 1)]
    bot_v.append(2 if bot_e[(m - 2, m - 1)] == 4 else 4)
    return TotalColoring(4, top_v, top_e), TotalColoring(4, tuple(bot_v), bot_e)


def color_grid(m: int, n: int) -> TotalColoring:
    """P_m x P_n: 5 colors for P_3 x P_3, otherwise ``Δ + 2``."""
    _check_min("color_grid", m=m, n=n)
    if (m, n) in _GRID_TABLES:
        return grid_table(m, n)
    if m < n:
        return transpose_coloring(color_grid(n, m), n, m)
    top, bottom = _path_ladder_layers(m)
    g = gr.cartesian_product(gr.path(m), gr.path(n))
    return compose_layers(g, LayerPlan(top, bottom, 5, 6))


def _cycle_ladder_layers(m: int) -> tuple[TotalColoring, TotalColoring, RungColors]:
    """Layer colorings of C_m x P_2 and the rungs that go with them."""
    cyc = gr.cycle(m)

    def layer(vs, es):
        # es[j] colors the edge (v_j, v_{j+1}); the last entry closes the cycle
        edges = {}
        for j in range(m):
            a, b = j, (j + 1) % m
            edges[(min(a, b), max(a, b))] = es[j]
        assert set(edges) == set(cyc.edges)
        return TotalColoring(max(vs + es), tuple(vs), edges)

    if m == 3:
        return layer([1, 3, 2], [2, 4, 5]), layer([3, 2, 1], [5, 4, 2]), [4, 1, 3]
    if m % 2:
        # listed colors start with the closing edge (v_m, v_1)
        k2 = (m - 1) // 2
        v1 = [4] + [1, 3] * k2
        e1 = [1, 3] + [2 if t % 2 == 0 else 4 for t in range(m - 2)]
        v2 = [2] + [3, 1] * k2
        e2 = [3, 1] + [4 if t % 2 == 0 else 2 for t in range(m - 2)]
        return layer(v1, e1[1:] + e1[:1]), layer(v2, e2[1:] + e2[:1]), 5
    v1 = [1, 3] * (m // 2)
    e1 = [2, 4] * (m // 2)
    v2 = [3, 1] * (m // 2)
    e2 = [4, 2] * (m // 2)
    return layer(v1, e1), layer(v2, e2), 5


def color_cylinder(m: int, n: int) -> TotalColoring:
    """C_m x P_n with ``Δ + 2`` colors."""
    _check_min("color_cylinder", m=m, n=n)
    top, bottom, rungs = _cycle_ladder_layers(m)
    g = gr.cartesian_product(gr.cycle(m), gr.path(n))
    if m == 3:
        return compose_layers(g, LayerPlan(top, bottom, rungs, 6))
    return compose_layers(g, LayerPlan(top, bottom, 5, 6))


def _hub_prism(factor: Graph, c: TotalColoring, n: int, top: int) -> TotalColoring:
    """Star and wheel prisms share one plan; ``c`` is the factor's base
    coloring with ``top = Δ(factor) + 1`` colors."""
    g = gr.cartesian_product(factor, gr.path(n))
    if n == 3:
        shifted = shift_coloring(c, 1, top)
        plan = LayerPlan(shifted, c, top + 1, top + 2)
        return compose_layers(g, plan)
    raised = shift_coloring(c, 1)
    return compose_layers(g, LayerPlan(c, raised, top + 2, top + 3))


def color_star_prism(m: int, n: int) -> TotalColoring:
    """S_m x P_n: ``Δ + 1`` colors when n = 3, ``Δ + 2`` otherwise."""
    _check_min("color_star_prism", m=m, n=n)
    return _hub_prism(gr.star(m), color_star(m), n, m + 1)


def color_wheel_prism(m: int, n: int) -> TotalColoring:
    """W_m x P_n: ``Δ + 1`` colors when n = 3 and m >= 4, ``Δ + 2`` otherwise."""
    _check_min("color_wheel_prism", m=m, n=n)
    if m == 3:
        return color_complete_prism(4, n)
    return _hub_prism(gr.wheel(m), color_wheel(m), n, m + 1)


def color_complete_prism(m: int, n: int) -> TotalColoring:
    """K_m x P_n with ``Δ + 2`` colors.

    Odd layers carry the complete-graph coloring shifted by one, even layers
    the coloring itself. For odd m both copies of ``v_i`` miss the color
    ``i + 1``, which is what the odd rung sets use; even rung sets get the
    fresh color ``m + 3``. (Putting ``m + 3`` on the odd rungs instead makes
    the last two layers of an even-length prism agree at ``v_1``.)
    """
    _check_min("color_complete_prism", m=m, n=n)
    c0 = color_complete(m)
    mod = c0.k
    raised = shift_coloring(c0, 1, mod)
    g = gr.cartesian_product(gr.complete(m), gr.path(n))
    if m % 2:
        missing = [i + 1 for i in range(1, m + 1)]
        return compose_layers(g, LayerPlan(raised, c0, missing, m + 3))
    return compose_layers(g, LayerPlan(raised, c0, m + 2, m + 3))


# products with a cycle -------------------------------------------------------


def _table(vertices: tuple[int, ...], edges: dict[tuple[int, int], int]) -> TotalColoring:
    return TotalColoring(max(vertices + tuple(edges.values())), vertices, edges)


# For odd n the last layer normally gets the factor coloring shifted by two,
# joined to layer n - 1 by color 1 and to layer 1 by Δ + 3. With S_2 and W_6
# a leaf or rim vertex then ties in sum with its copy in layer 1, because
# the shift adds exactly what the two fresh rung colors add. These closings
# (layer n, rung n - 1, wrap rung) replace it; they were found by exhaustive
# search with the rest of the plan pinned. One entry serves n = 3, the other
# every odd n >= 5.
_HUB_CLOSINGS = {
    ("star", 2): {
        3: (_table((1, 6, 5), {(0, 1): 2, (0, 2): 3}), [6, 4, 1], [4, 3, 4]),
        5: (_table((2, 5, 4), {(0, 1): 3, (0, 2): 6}), [1, 1, 1], [4, 4, 3]),
    },
    ("wheel", 6): {
        3: (
            _table(
                (1, 3, 4, 5, 6, 3, 8),
                {(0, 1): 2, (0, 2): 3, (0, 3): 4, (0, 4): 5, (0, 5): 6, (0, 6): 7,
                 (1, 2): 7, (1, 6): 5, (2, 3): 2, (3, 4): 3, (4, 5): 7, (5, 6): 4},
            ),
            [10, 1, 6, 1, 2, 2, 2],
            [8, 4, 5, 6, 1, 1, 1],
        ),
        5: (
            _table(
                (2, 5, 6, 8, 7, 3, 4),
                {(0, 1): 3, (0, 2): 4, (0, 3): 5, (0, 4): 6, (0, 5): 7, (0, 6): 10,
                 (1, 2): 2, (1, 6): 6, (2, 3): 7, (3, 4): 3, (4, 5): 4, (5, 6): 5},
            ),
            [1, 1, 1, 1, 2, 2, 2],
            [8, 4, 5, 6, 1, 1, 1],
        ),
    },
}


def _hub_torus(family: str, m: int, c: TotalColoring, n: int) -> TotalColoring:
    top = m + 1
    factor = gr.star(m) if family == "star" else gr.wheel(m)
    g = gr.cartesian_product(factor, gr.cycle(n))
    plan = LayerPlan(c, shift_coloring(c, 1), top + 2, top + 3)
    if n % 2:
        closing = _HUB_CLOSINGS.get((family, m))
        if closing:
            layer, rung, wrap = closing[min(n, 5)]
        else:
            layer, rung, wrap = shift_coloring(c, 2), 1, top + 3
        plan.layer_overrides[n] = layer
        plan.rung_overrides[n - 1] = rung
        plan.rung_overrides[n] = wrap
    return compose_layers(g, plan)


# W_3 = K_4 leaves no room for a shifted third copy. Odd n >= 5 closes with
# a two-layer tail (layers n - 1, n and rungs n - 2, n - 1, n) found by
# search like the closings above; C_3 gets a full table.
_W3_TAIL = (
    _table((1, 2, 7, 3), {(0, 1): 3, (0, 2): 4, (0, 3): 5, (1, 2): 1, (1, 3): 7, (2, 3): 2}),
    _table((7, 3, 4, 2), {(0, 1): 1, (0, 2): 3, (0, 3): 4, (1, 2): 2, (1, 3): 5, (2, 3): 6}),
)
_W3_TAIL_RUNGS = ([2, 6, 6, 6], [6, 4, 5, 1], [2, 7, 7, 7])

_W3_C3 = _table(
    (1, 3, 2, 7, 2, 5, 7, 6, 3, 2, 4, 5),
    {
        (0, 1): 2, (0, 2): 3, (0, 3): 4, (1, 2): 1, (1, 3): 5, (2, 3): 6,
        (4, 5): 1, (4, 6): 3, (4, 7): 4, (5, 6): 2, (5, 7): 3, (6, 7): 5,
        (8, 9): 1, (8, 10): 2, (8, 11): 4, (9, 10): 5, (9, 11): 3, (10, 11): 1,
        (0, 4): 5, (1, 5): 4, (2, 6): 4, (3, 7): 1,
        (4, 8): 7, (5, 9): 6, (6, 10): 6, (7, 11): 7,
        (0, 8): 6, (1, 9): 7, (2, 10): 7, (3, 11): 2,
    },
)


def color_wheel_torus(m: int, n: int) -> TotalColoring:
    """W_m x C_n with ``Δ + 2`` colors."""
    _check_min("color_wheel_torus", m=m, n=n)
    if m > 3:
        return _hub_torus("wheel", m, color_wheel(m), n)
    if n == 3:
        return _W3_C3
    # the complete-prism layers close up directly when n is even
    c0 = color_complete(4)
    g = gr.cartesian_product(gr.wheel(3), gr.cycle(n))
    plan = LayerPlan(shift_coloring(c0, 1, 5), c0, 6, 7)
    if n % 2:
        plan.layer_overrides.update({n - 1: _W3_TAIL[0], n: _W3_TAIL[1]})
        plan.rung_overrides.update(zip((n - 2, n - 1, n), _W3_TAIL_RUNGS))
    return compose_layers(g, plan)


def color_star_torus(m: int, n: int) -> TotalColoring:
    """S_m x C_n with ``Δ + 2`` colors."""
    _check_min("color_star_torus", m=m, n=n)
    return _hub_torus("star", m, color_star(m), n)



def _odd_torus_layers(m: int):
    """Layer colorings of C_m x C_n for odd m and n, and the three rung
    templates.

    ``first``, ``second`` and ``third`` color layers 1, 2 and every odd layer
    from 3 on; ``later`` colors the even layers from 4 on. ``h0`` runs from
    an odd layer >= 3 to the next one (and across the wrap), ``h1`` joins the
    first two layers and ``h2`` leaves every even layer.
    """

    def tail(start: int) -> list[int]:
        # positions 2..m cycle through 3, 2, 1 shifted by `start` (mod 3)
        return [residue(start - p, 3) for p in range(2, m + 1)]

    def layer(vs, closing, es):
        edges = {(0, m - 1): closing}
        for j in range(m - 1):
            edges[(j, j + 1)] = es[j]
        return TotalColoring(max(vs + [closing] + es), tuple(vs), edges)

    first = layer([4] + tail(5), 5, [residue(3 - p, 3) for p in range(1, m)])
    second = layer([5] + tail(3), 6, [residue(4 - p, 3) for p in range(1, m)])
    third_edges = [residue(5 - p, 3) for p in range(1, m)]
    third = layer([6] + tail(4), 4, third_edges)
    later_vs = [5] + [6 if p % 2 == 0 else 4 for p in range(2, m)] + [residue(2 - m, 3)]
    later = layer(later_vs, 4, third_edges)
    h0 = [3] + [5 if p % 2 == 0 else 6 for p in range(2, m + 1)]
    h1 = [1] + [6 if p % 2 == 0 else 4 for p in range(2, m + 1)]
    h2 = [2] + [4 if p % 2 == 0 else 5 for p in range(2, m + 1)]
    return first, second, third, later, h0, h1, h2


def color_torus(m: int, n: int) -> TotalColoring:
    """C_m x C_n with 6 colors."""
    _check_min("color_torus", m=m, n=n)
    g = gr.cartesian_product(gr.cycle(m), gr.cycle(n))
    if m % 2 == 0 and n % 2:
        return transpose_coloring(color_torus(n, m), n, m)
    if m % 2 == 0:
        v1 = tuple([1, 3] * (m // 2))
        v2 = tuple([3, 1] * (m // 2))
        cyc = gr.cycle(m).edges
        e1 = {e: (4 if min(e) % 2 == 0 else 2) for e in cyc}
        e1[(0, m - 1)] = 2
        e2 = {e: 6 - c for e, c in e1.items()}
        return compose_layers(g, LayerPlan(TotalColoring(4, v1, e1), TotalColoring(4, v2, e2), 5, 6))
    if n % 2 == 0:
        top, bottom, rungs = _cycle_ladder_layers(m)
        return compose_layers(g, LayerPlan(top, bottom, rungs if m == 3 else 5, 6))
    first, second, third, later, h0, h1, h2 = _odd_torus_layers(m)
    plan = LayerPlan(
        third, later, h0, h2, layer_overrides={1: first, 2: second}, rung_overrides={1: h1}
    )
    return compose_layers(g, plan)


# dispatch ----------------------------------------------------------------------

SUPPORTED = (
    "path", "cycle", "star", "wheel", "complete",
    "grid", "cylinder", "star_prism", "complete_prism", "wheel_prism",
    "wheel_torus", "star_torus", "torus",
)

_PRODUCT_COLORERS = {
    ("path", "path"): ("grid", color_grid),
    ("cycle", "path"): ("cylinder", color_cylinder),
    ("star", "path"): ("star_prism", color_star_prism),
    ("complete", "path"): ("complete_prism", color_complete_prism),
    ("wheel", "path"): ("wheel_prism", color_wheel_prism),
    ("wheel", "cycle"): ("wheel_torus", color_wheel_torus),
    ("star", "cycle"): ("star_torus", color_star_torus),
    ("cycle", "cycle"): ("torus", color_torus),
}


def construct(spec: FamilySpec) -> TotalColoring:
    """The theorem coloring for ``spec``, indexed like ``build(spec)``."""
    spec.validate()
    fam = spec.family
    if fam == "path":
        return color_path(spec.size)
    if fam == "cycle":
        return color_cycle(spec.size)
    if fam == "star":
        return color_star(spec.size)
    if fam == "wheel":
        return color_wheel(spec.size)
    if fam == "complete":
        return color_complete(spec.size)
    if fam == "product":
        a, b = spec.factors
        entry = _PRODUCT_COLORERS.get((a.family, b.family))
        if entry is not None:
            return entry[1](a.size, b.size)
    raise UnsupportedFamilyError(
        f"no construction for {spec.label}; supported: {', '.join(SUPPORTED)}"
    )


def claimed_colors(spec: FamilySpec) -> int:
    """Color count the classification assigns to ``spec``."""
    g = gr.build(spec)
    d = g.max_degree
    fam = spec.family
    if fam == "path":
        return d + 1 if spec.size == 3 else d + 2
    if fam == "cycle":
        return d + 3 if spec.size == 3 else d + 2
    if fam == "star":
        return d + 1
    if fam == "wheel":
        return d + 2 if spec.size == 3 else d + 1
    if fam == "complete":
        return d + 3 if spec.size % 2 else d + 2
    if fam == "product":
        a, b = spec.factors
        pair = (a.family, b.family)
        if pair == ("path", "path") and (a.size, b.size) == (3, 3):
            return d + 1
        if pair == ("star", "path") and b.size == 3:
            return d + 1
        if pair == ("wheel", "path") and b.size == 3 and a.size >= 4:
            return d + 1
        if pair in _PRODUCT_COLORERS:
            return d + 2
    raise UnsupportedFamilyError(f"no classification for {spec.label}")
