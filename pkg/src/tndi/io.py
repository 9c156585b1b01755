"""JSON persistence for graphs and colorings, and Graphviz DOT export."""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import TotalColoring, vertex_sums
from .graph import Graph, ProductMeta

__all__ = [
    "graph_to_json",
    "graph_from_json",
    "dumps",
    "save_json",
    "load_graph",
    "load_coloring",
    "to_dot",
]


def graph_to_json(g: Graph) -> dict:
    product = None
    if g.product is not None:
        product = {
            "layers": g.product.layers,
            "layer_size": g.product.layer_size,
            "factors": list(g.product.factors),
        }
    return {"name": g.name, "n": g.n, "edges": [list(e) for e in g.edges], "product": product}


def graph_from_json(data: dict) -> Graph:
    meta = None
    p = data.get("product")
    if p:
        factors = tuple(p.get("factors") or ("?", "?"))
        meta = ProductMeta(factors, int(p["layers"]), int(p["layer_size"]))
        if meta.layers * meta.layer_size != int(data["n"]):
            raise ValueError("product metadata does not match the vertex count")
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    return Graph(str(data.get("name", "G")), int(data["n"]), edges, meta)


def dumps(obj: dict) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_json(obj: dict, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def load_coloring(path: str | Path) -> TotalColoring:
    return TotalColoring.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, coloring: TotalColoring | None = None) -> str:
    """Undirected DOT text. With a coloring, vertex ``v`` is labeled
    ``"<color> | <sum>"`` and every edge carries its color."""
    lines = [f"graph {_quote(g.name)} {{"]
    sums = vertex_sums(g, coloring) if coloring is not None else None
    for v in range(g.n):
        if coloring is None:
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v} [label={_quote(f'{coloring.vertices[v]} | {sums[v]}')}];")
    for u, v in g.edges:
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f"  {u} -- {v} [label={_quote(str(coloring.edge_color(u, v)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
