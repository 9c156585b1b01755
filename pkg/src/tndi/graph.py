"""Simple undirected graphs, the named families, and the Cartesian product.

Vertices are ``0..n-1``. Edges are stored once as ``(u, v)`` with ``u < v``,
sorted lexicographically, so the edge list doubles as a stable edge index.

A product ``G x H`` uses layer-major indexing: the vertex ``(v_j, w_i)`` lives
at index ``i * |V(G)| + j``. Layer ``i`` (1-based) is the copy of ``G`` sitting
at the ``i``-th vertex of ``H``; rungs join layer ``i`` to layer ``i + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

__all__ = [
    "Graph",
    "ProductMeta",
    "FamilySpec",
    "ParameterError",
    "NotAProductError",
    "build",
    "path",
    "cycle",
    "star",
    "wheel",
    "complete",
    "complete_bipartite",
    "hypercube",
    "cartesian_product",
    "layer",
    "rung_edges",
    "max_degree",
    "adjacent_max_pair",
]


class ParameterError(ValueError):
    """A family parameter is outside the range the family is defined for."""


class NotAProductError(ValueError):
    """Layer/rung queries on a graph that carries no product metadata."""


@dataclass(frozen=True)
class ProductMeta:
    factors: tuple[str, str]
    layers: int
    layer_size: int


@dataclass(frozen=True)
class Graph:
    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    product: ProductMeta | None = None

    def __post_init__(self):
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {self.n})")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))
        if self.product is not None:
            p = self.product
            if p.layers * p.layer_size != self.n:
                raise ValueError("product metadata does not match vertex count")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @property
    def max_degree(self) -> int:
        return max_degree(self)

    @property
    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(self.degrees)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degrees)) == 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def relabel(self, perm: list[int] | tuple[int, ...], name: str | None = None) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``; product metadata is dropped."""
        edges = tuple((perm[u], perm[v]) for u, v in self.edges)
        return Graph(name or self.name, self.n, edges)


_FAMILY_BOUNDS = {
    "path": {"n": 1},
    "cycle": {"n": 3},
    "star": {"m": 2},
    "wheel": {"m": 3},
    "complete": {"m": 1},
    "complete_bipartite": {"p": 1, "q": 1},
    "hypercube": {"d": 1},
}

_PRODUCT_ALIASES = {
    # name: (first factor family, second factor family)
    "grid": ("path", "path"),
    "cylinder": ("cycle", "path"),
    "star_prism": ("star", "path"),
    "complete_prism": ("complete", "path"),
    "wheel_prism": ("wheel", "path"),
    "wheel_torus": ("wheel", "cycle"),
    "star_torus": ("star", "cycle"),
    "torus": ("cycle", "cycle"),
}

_SYMBOLS = {"P": "path", "C": "cycle", "S": "star", "W": "wheel", "K": "complete", "Q": "hypercube"}
_SYMBOL_OF = {v: k for k, v in _SYMBOLS.items()}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name of a family instance, e.g. ``FamilySpec.parse("C5xC4")``.

    ``params`` holds the family's integer parameters (``m``/``n`` for the
    one-parameter families, ``p``/``q`` for complete bipartite, ``d`` for the
    hypercube). Products carry their two factor specs in ``factors``.
    """

    family: str
    params: dict[str, int] = field(default_factory=dict)
    factors: tuple["FamilySpec", "FamilySpec"] | None = None

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.params.items())), self.factors))

    @property
    def size(self) -> int:
        """The single size parameter of a one-parameter family."""
        (value,) = self.params.values()
        return value

    def validate(self) -> None:
        if self.family == "product":
            if self.factors is None or len(self.factors) != 2:
                raise ParameterError("product needs exactly two factors")
            for f in self.factors:
                f.validate()
            return
        bounds = _FAMILY_BOUNDS.get(self.family)
        if bounds is None:
            raise ParameterError(f"unknown family {self.family!r}")
        for key, low in bounds.items():
            if key not in self.params:
                raise ParameterError(f"{self.family} needs parameter {key}")
            if self.params[key] < low:
                raise ParameterError(
                    f"{self.family} requires {key} >= {low}, got {key}={self.params[key]}"
                )
        extra = set(self.params) - set(bounds)
        if extra:
            raise ParameterError(f"{self.family} does not take {sorted(extra)}")

    @property
    def label(self) -> str:
        if self.family == "product":
            a, b = self.factors
            return f"{a.label}x{b.label}"
        if self.family == "complete_bipartite":
            return f"K{self.params['p']},{self.params['q']}"
        return f"{_SYMBOL_OF[self.family]}{self.size}"

    def __str__(self):
        return self.label

    @classmethod
    def of(cls, family: str, m: int | None = None, n: int | None = None) -> "FamilySpec":
        """Spec from a family name and CLI-style ``m``/``n`` parameters.

        Product aliases (``torus``, ``wheel_prism``, ...) take ``m`` for the
        first factor and ``n`` for the second.
        """
        if family in _PRODUCT_ALIASES:
            if m is None or n is None:
                raise ParameterError(f"{family} needs both m and n")
            fa, fb = _PRODUCT_ALIASES[family]
            return cls.product(cls.of(fa, m), cls.of(fb, n))
        if family == "complete_bipartite":
            if m is None or n is None:
                raise ParameterError("complete_bipartite needs both m and n")
            return cls(family, {"p": m, "q": n})
        if family not in _FAMILY_BOUNDS:
            raise ParameterError(f"unknown family {family!r}")
        key = next(iter(_FAMILY_BOUNDS[family]))
        value = m if m is not None else n
        if value is None:
            raise ParameterError(f"{family} needs a size parameter")
        return cls(family, {key: value})

    @classmethod
    def product(cls, a: "FamilySpec", b: "FamilySpec") -> "FamilySpec":
        return cls("product", {}, (a, b))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse labels such as ``W5``, ``K2,3``, ``Q3`` or ``S4xP3``."""
        parts = re.split(r"\s*[x×]\s*", text.strip())
        if len(parts) == 2:
            return cls.product(cls.parse(parts[0]), cls.parse(parts[1]))
        if len(parts) != 1:
            raise ParameterError(f"cannot parse family {text!r}")
        mb = re.fullmatch(r"K_?\{?(\d+),(\d+)\}?", text)
        if mb:
            return cls("complete_bipartite", {"p": int(mb[1]), "q": int(mb[2])})
        mo = re.fullmatch(r"([PCSWKQ])_?\{?(\d+)\}?", text)
        if not mo:
            raise ParameterError(f"cannot parse family {text!r}")
        return cls.of(_SYMBOLS[mo[1]], int(mo[2]))


def path(n: int) -> Graph:
    FamilySpec("path", {"n": n}).validate()
    return Graph(f"P{n}", n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    FamilySpec("cycle", {"n": n}).validate()
    return Graph(f"C{n}", n, tuple((i, (i + 1) % n) for i in range(n)))


def star(m: int) -> Graph:
    """Star with hub 0 and leaves ``1..m``."""
    FamilySpec("star", {"m": m}).validate()
    return Graph(f"S{m}", m + 1, tuple((0, i) for i in range(1, m + 1)))


def wheel(m: int) -> Graph:
    """Wheel with hub 0 and rim ``1..m`` in cyclic (clockwise) order."""
    FamilySpec("wheel", {"m": m}).validate()
    spokes = [(0, i) for i in range(1, m + 1)]
    rim = [(i, i % m + 1) for i in range(1, m + 1)]
    return Graph(f"W{m}", m + 1, tuple(spokes + rim))


def complete(m: int) -> Graph:
    FamilySpec("complete", {"m": m}).validate()
    return Graph(f"K{m}", m, tuple(combinations(range(m), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    FamilySpec("complete_bipartite", {"p": p, "q": q}).validate()
    return Graph(f"K{p},{q}", p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def hypercube(d: int) -> Graph:
    FamilySpec("hypercube", {"d": d}).validate()
    n = 1 << d
    edges = tuple((v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b))
    return Graph(f"Q{d}", n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g x h`` with layer-major indexing; layer ``i`` is a copy of ``g``."""
    if g.n == 0 or h.n == 0:
        raise ValueError("both factors must be nonempty")
    s = g.n
    edges = [(i * s + a, i * s + b) for i in range(h.n) for a, b in g.edges]
    edges += [(p * s + j, q * s + j) for p, q in h.edges for j in range(s)]
    meta = ProductMeta((g.name, h.name), h.n, s)
    return Graph(f"{g.name}x{h.name}", g.n * h.n, tuple(edges), meta)


_BUILDERS = {
    "path": lambda p: path(p["n"]),
    "cycle": lambda p: cycle(p["n"]),
    "star": lambda p: star(p["m"]),
    "wheel": lambda p: wheel(p["m"]),
    "complete": lambda p: complete(p["m"]),
    "complete_bipartite": lambda p: complete_bipartite(p["p"], p["q"]),
    "hypercube": lambda p: hypercube(p["d"]),
}


def build(spec: FamilySpec) -> Graph:
    spec.validate()
    if spec.family == "product":
        a, b = spec.factors
        return cartesian_product(build(a), build(b))
    return _BUILDERS[spec.family](spec.params)


def _meta(g: Graph) -> ProductMeta:
    if g.product is None:
        raise NotAProductError(f"{g.name} is not a product graph")
    return g.product


def layer(g: Graph, i: int) -> list[int]:
    """Vertex indices of the ``i``-th copy of the first factor (1-based)."""
    meta = _meta(g)
    if not 1 <= i <= meta.layers:
        raise IndexError(f"layer {i} outside 1..{meta.layers}")
    s = meta.layer_size
    return list(range((i - 1) * s, i * s))


def rung_edges(g: Graph, i: int) -> list[tuple[int, int]]:
    """Edges from layer ``i`` to layer ``i + 1``, or the wrap rungs back to
    layer 1 when ``i`` is the last layer of a cyclic second factor.

    Pairs are canonical ``(u, v)`` with ``u < v``, one per first-factor vertex.
    """
    meta = _meta(g)
    l, s = meta.layers, meta.layer_size
    if 1 <= i < l:
        lo, hi = i - 1, i
    elif i == l and l >= 3:
        lo, hi = 0, l - 1
    else:
        raise IndexError(f"rung set {i} outside 1..{l - 1}")
    out = [(lo * s + j, hi * s + j) for j in range(s) if g.has_edge(lo * s + j, hi * s + j)]
    if i == l and not out:
        raise IndexError(f"{g.name} has no wrap-around rungs")
    return out


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty graph has no maximum degree")
    return max(g.degrees)


def adjacent_max_pair(g: Graph) -> tuple[int, int] | None:
    """Some edge whose endpoints both have maximum degree, else ``None``."""
    d = max_degree(g)
    for u, v in g.edges:
        if g.degrees[u] == d and g.degrees[v] == d:
            return (u, v)
    return None
