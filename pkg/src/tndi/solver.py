"""Exact search for distinguishing total colorings and vertex colorings.

The search colors one vertex at a time, followed by every still-uncolored
edge at that vertex, so each vertex is finished as soon as its own step is
done and sum (or set) conflicts surface early. Forward checking keeps, per
element and color, the number of colored neighbors holding that color.

Three modes share the engine:

``sums``
    proper total coloring, adjacent vertices differ in their sums;
``sets``
    proper total coloring, adjacent vertices differ in their color sets;
``vertex``
    proper vertex coloring, edges are ignored.

Node budgets make results reproducible: the search counts every color
assignment it tries and gives up deterministically once the budget is spent.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal

from .coloring import TotalColoring
from .graph import Graph

Mode = Literal["sums", "sets", "vertex"]
MODES = ("sums", "sets", "vertex")
DEFAULT_BUDGET = 50_000_000

__all__ = [
    "MODES",
    "DEFAULT_BUDGET",
    "SearchTimeout",
    "NoSolutionError",
    "SolveResult",
    "lower_bound",
    "resolve_budget",
    "feasible",
    "solve_exact",
    "solve_vertex_chromatic",
]


class SearchTimeout(RuntimeError):
    """The node budget ran out before the question was settled."""

    def __init__(self, nodes_explored: int, k: int | None = None):
        where = f" at k={k}" if k is not None else ""
        super().__init__(f"node budget exhausted{where} after {nodes_explored} nodes")
        self.nodes_explored = nodes_explored
        self.k = k


class NoSolutionError(RuntimeError):
    """No valid coloring with at most ``k_max`` colors."""

    def __init__(self, k_max: int, nodes_explored: int):
        super().__init__(f"no coloring with at most {k_max} colors")
        self.k_max = k_max
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SolveResult:
    mode: str
    min_k: int
    lower_bound: int
    witness: TotalColoring
    nodes_explored: int

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "min_k": self.min_k,
            "lower_bound": self.lower_bound,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_json(),
        }


def lower_bound(g: Graph) -> int:
    """``Δ + 2`` when two adjacent vertices both have maximum degree, else ``Δ + 1``."""
    if g.n == 0:
        raise ValueError("lower bound of the empty graph is undefined")
    d = g.max_degree
    deg = g.degrees
    if any(deg[u] == d and deg[v] == d for u, v in g.edges):
        return d + 2
    return d + 1


def resolve_budget(budget: int | None = None) -> int:
    """An explicit budget wins, then ``TNDI_BUDGET``, then the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("TNDI_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


# -- search engine -------------------------------------------------------------


def _order(g: Graph, vertex_only: bool) -> list[int]:
    """Element order: start from a maximum-degree vertex, then repeatedly take
    the vertex with the most already-ordered neighbors (ties: higher degree,
    then lower index); each vertex is followed by its unordered edges."""
    deg = g.degrees
    placed = [False] * g.n
    links = [0] * g.n
    order: list[int] = []
    edge_done = [False] * g.m
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not placed[u]),
            key=lambda u: (links[u], deg[u], -u),
        )
        placed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            links[w] += 1
        if vertex_only:
            continue
        for e in g.incident[v]:
            if not edge_done[e]:
                edge_done[e] = True
                order.append(g.n + e)
    return order


class _Search:
    def __init__(self, g: Graph, k: int, mode: str, fixed: Mapping[int, int] | None = None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.g, self.k, self.mode = g, k, mode
        n = g.n
        vertex_only = mode == "vertex"
        size = n if vertex_only else n + g.m
        conflicts: list[list[int]] = [[] for _ in range(size)]
        for idx, (u, v) in enumerate(g.edges):
            conflicts[u].append(v)
            conflicts[v].append(u)
            if not vertex_only:
                x = n + idx
                conflicts[x] += [u, v]
                conflicts[u].append(x)
                conflicts[v].append(x)
        if not vertex_only:
            for v in range(n):
                inc = g.incident[v]
                for a in inc:
                    for b in inc:
                        if a != b:
                            conflicts[n + a].append(n + b)
        self.conflicts = conflicts
        # vertices whose colors/sums an element feeds into
        feeds: list[tuple[int, ...]] = [(v,) for v in range(n)]
        if not vertex_only:
            feeds += [e for e in g.edges]
        self.feeds = feeds
        self.order = _order(g, vertex_only)
        self.size = size
        self.fixed = dict(fixed or {})
        self.symmetry = mode != "sums" and not self.fixed
        self.nodes = 0

    def run(self, budget: int, first_colors=None):
        """Depth-first search. Returns the color list or ``None``; raises
        :class:`SearchTimeout` when ``budget`` nodes are exceeded."""
        g, k = self.g, self.k
        n = g.n
        size = self.size
        order = self.order
        check_sums = self.mode == "sums"
        check_sets = self.mode == "sets"
        colors = [0] * size
        forbid = [[0] * (k + 1) for _ in range(size)]
        remaining = [1 + g.degrees[v] for v in range(n)] if self.mode != "vertex" else None
        total = [0] * n
        mask = [0] * n
        adjacency = g.adjacency
        conflicts, feeds, fixed = self.conflicts, self.feeds, self.fixed
        symmetry = self.symmetry

        def assign(x: int, c: int) -> bool:
            colors[x] = c
            ok = True
            for y in conflicts[x]:
                row = forbid[y]
                row[c] += 1
                if ok and colors[y] == 0 and row[c] == 1:
                    # y just lost a color; make sure it keeps at least one
                    if y in fixed:
                        if fixed[y] == c:
                            ok = False
                    elif all(row[1:]):
                        ok = False
            if remaining is not None:
                bit = 1 << c
                for v in feeds[x]:
                    total[v] += c
                    mask[v] |= bit
                    remaining[v] -= 1
                    if ok and remaining[v] == 0:
                        for w in adjacency[v]:
                            if remaining[w] == 0:
                                if check_sums and total[w] == total[v]:
                                    ok = False
                                    break
                                if check_sets and mask[w] == mask[v]:
                                    ok = False
                                    break
            return ok

        def unassign(x: int, c: int) -> None:
            colors[x] = 0
            for y in conflicts[x]:
                forbid[y][c] -= 1
            if remaining is None:
                return
            for v in feeds[x]:
                total[v] -= c
                remaining[v] += 1
                if check_sets:
                    # a color can reach v through one element only, since
                    # the coloring is proper around v
                    mask[v] &= ~(1 << c)

        def dfs(depth: int, top: int) -> bool:
            if depth == size:
                return True
            x = order[depth]
            if x in fixed:
                candidates = [fixed[x]]
            elif depth == 0 and first_colors is not None:
                candidates = first_colors
            else:
                hi = min(k, top + 1) if symmetry else k
                candidates = range(1, hi + 1)
            row = forbid[x]
            for c in candidates:
                if row[c]:
                    continue
                self.nodes += 1
                if self.nodes > budget:
                    raise SearchTimeout(self.nodes, k)
                if assign(x, c) and dfs(depth + 1, max(top, c)):
                    return True
                unassign(x, c)
            return False

        for x, c in fixed.items():
            if not 1 <= c <= k:
                return None
        if dfs(0, 0):
            return colors
        return None

    def to_coloring(self, colors: list[int]) -> TotalColoring:
        g = self.g
        vertices = tuple(colors[: g.n])
        if self.mode == "vertex":
            return TotalColoring(self.k, vertices, {})
        return TotalColoring(self.k, vertices, dict(zip(g.edges, colors[g.n :])))


def _subtree(args):
    g, k, mode, fixed, budget, c = args
    s = _Search(g, k, mode, fixed)
    try:
        colors = s.run(budget, first_colors=[c])
    except SearchTimeout:
        return c, None, s.nodes, True
    return c, colors, s.nodes, False


def _feasible(g: Graph, k: int, mode: str, budget: int, threads: int, fixed=None):
    """Returns ``(coloring or None, nodes)``."""
    search = _Search(g, k, mode, fixed)
    if threads <= 1 or search.size == 0:
        try:
            colors = search.run(budget)
        except SearchTimeout:
            raise
        return (search.to_coloring(colors) if colors else None), search.nodes
    # split on the colors of the first element; with symmetry breaking only
    # color 1 is ever tried there, so the split degenerates to one subtree
    x0 = search.order[0]
    if x0 in search.fixed:
        firsts = [search.fixed[x0]]
    elif search.symmetry:
        firsts = [1]
    else:
        firsts = list(range(1, k + 1))
    jobs = [(g, k, mode, fixed, budget, c) for c in firsts]
    with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
        results = list(pool.map(_subtree, jobs))
    # reduce exactly as the sequential search would have: subtrees in color
    # order, cumulative node budget, first success wins
    nodes = 0
    for c, colors, used, timed_out in results:
        if timed_out or nodes + used > budget:
            raise SearchTimeout(min(nodes + used, budget + 1), k)
        nodes += used
        if colors is not None:
            return search.to_coloring(colors), nodes
    return None, nodes


def feasible(
    g: Graph,
    k: int,
    mode: Mode = "sums",
    *,
    budget: int | None = None,
    threads: int = 1,
    fixed: Mapping[int, int] | None = None,
) -> TotalColoring | None:
    """A valid coloring with palette ``1..k`` in the given mode, or ``None``
    when none exists.

    ``fixed`` pins elements to colors; vertices are numbered ``0..n-1`` and
    edge ``g.edges[i]`` is element ``n + i``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    coloring, _ = _feasible(g, k, mode, resolve_budget(budget), threads, fixed)
    return coloring


def solve_exact(
    g: Graph,
    mode: Mode = "sums",
    k_max: int | None = None,
    *,
    budget: int | None = None,
    threads: int = 1,
) -> SolveResult:
    """Smallest ``k`` admitting a valid coloring, found by trying ``k`` upward
    from the mode's lower bound. ``budget`` applies to each ``k`` separately."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "sums":
        lb = lower_bound(g)
    elif mode == "sets":
        lb = g.max_degree + 1
    else:
        lb = 1
    if k_max is None:
        k_max = g.max_degree + 3 if mode != "vertex" else max(g.n, 1)
    if k_max < lb:
        raise ValueError(f"k_max={k_max} is below the lower bound {lb}")
    budget = resolve_budget(budget)
    total = 0
    for k in range(lb, k_max + 1):
        try:
            coloring, nodes = _feasible(g, k, mode, budget, threads)
        except SearchTimeout as exc:
            raise SearchTimeout(total + exc.nodes_explored, k) from None
        total += nodes
        if coloring is not None:
            return SolveResult(mode, k, lb, coloring, total)
    raise NoSolutionError(k_max, total)


def _greedy_colors(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    col = [0] * g.n
    for v in order:
        used = {col[w] for w in g.adjacency[v]}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return max(col, default=0)


def solve_vertex_chromatic(g: Graph, k: int, *, budget: int | None = None) -> bool:
    """Whether ``g`` has a proper vertex coloring with ``k`` colors."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0 or _greedy_colors(g) <= k:
        return True
    return feasible(g, k, "vertex", budget=budget) is not None
