"""JSON and DOT serialization.

Canonical graph schema::

    {"vertices": ["v1", ...],
     "edges": [{"id": "e1", "src": "v1", "dst": "v2"}, ...],
     "infinite_bundles": [{"src": "v1", "dst": "v2"}, ...]}

Matrix schema uses decimal-string entries so interchange never overflows
64-bit consumers::

    {"index": ["v1", ...], "rows": [["0", "3"], ["0", "0"]]}
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError, QuiverError
from .graph import Graph, build_graph
from .matrices import CountMatrix


def graph_to_obj(graph: Graph) -> dict[str, Any]:
    return {
        "vertices": list(graph.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in graph.edges],
        "infinite_bundles": [
            {"src": s, "dst": d} for s, d in graph.infinite_bundles
        ],
    }


def graph_from_obj(obj: Any) -> Graph:
    try:
        vertices = [str(v) for v in obj["vertices"]]
        edges = [(str(e["id"]), str(e["src"]), str(e["dst"])) for e in obj.get("edges", [])]
        bundles = [(str(b["src"]), str(b["dst"])) for b in obj.get("infinite_bundles", [])]
    except (TypeError, KeyError) as exc:
        raise ParseError(f"graph document does not match the schema: {exc}") from exc
    return build_graph(vertices, edges, bundles)


def graph_to_json(graph: Graph, indent: int | None = None) -> str:
    return json.dumps(graph_to_obj(graph), indent=indent, ensure_ascii=False)


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def dump_graph(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_json(graph, indent=2) + "\n")


def matrix_to_obj(matrix: CountMatrix) -> dict[str, Any]:
    return {
        "index": list(matrix.index),
        "rows": [[str(x) for x in row] for row in matrix.rows],
    }


def matrix_from_obj(obj: Any) -> CountMatrix:
    try:
        index = tuple(str(v) for v in obj["index"])
        rows = tuple(tuple(int(x) for x in row) for row in obj["rows"])
    except (TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"matrix document does not match the schema: {exc}") from exc
    try:
        return CountMatrix(index=index, rows=rows)
    except QuiverError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_dot(graph: Graph, name: str = "E") -> str:
    """DOT export: edge label = edge id, bundles rendered as one edge labeled ∞."""
    lines = [f"digraph {json.dumps(name)} {{"]
    for v in graph.vertices:
        lines.append(f"  {json.dumps(v)};")
    for e in graph.edges:
        lines.append(f"  {json.dumps(e.src)} -> {json.dumps(e.dst)} [label={json.dumps(e.id)}];")
    for s, d in graph.infinite_bundles:
        lines.append(f'  {json.dumps(s)} -> {json.dumps(d)} [label="∞"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
