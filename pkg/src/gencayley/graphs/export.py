"""Text serialization of graphs.

Supports dumping SimpleGraph to:
- DOT (one line, edges only, smaller index first)
- JSON ({"n", "labels", "edges"})
- GraphML (lxml, pretty-printed)
- File path, in any of the above
"""

from __future__ import annotations

import json
from os import PathLike
from pathlib import Path
from typing import Any, Literal

from lxml import etree

from gencayley.graphs.graph import SimpleGraph

GraphFormat = Literal["dot", "json", "graphml"]

GRAPHML_NAMESPACE = "http://graphml.graphdrawing.org/xmlns"


def _quote(label: str) -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def graph_to_dot(X: SimpleGraph) -> str:
    """Serialize X as an undirected DOT graph.

    Each edge appears once, as `"label_i" -- "label_j";` with i <= j, in
    lexicographic (i, j) order.

    Example:
        >>> graph_to_dot(complete_graph(2))
        'graph { "0" -- "1"; }'
    """
    parts = [f"{_quote(X.labels[i])} -- {_quote(X.labels[j])};" for i, j in X.edges()]
    return " ".join(["graph {", *parts, "}"])


def graph_to_dict(X: SimpleGraph) -> dict[str, Any]:
    return {
        "n": X.n,
        "labels": list(X.labels),
        "edges": [[i, j] for i, j in X.edges()],
    }


def graph_to_json(X: SimpleGraph, *, indent: int | None = 2) -> str:
    """Serialize X as JSON with sorted [i, j] edge pairs.

    Args:
        X: The graph to serialize.
        indent: Indentation level for pretty-printing. None for compact.
    """
    return json.dumps(graph_to_dict(X), indent=indent, ensure_ascii=False)


def graph_to_graphml(X: SimpleGraph, *, pretty_print: bool = True) -> str:
    """Serialize X as GraphML with the vertex labels as a node attribute.

    Args:
        X: The graph to serialize.
        pretty_print: If True, format with indentation.
    """
    ns = GRAPHML_NAMESPACE
    root = etree.Element(f"{{{ns}}}graphml", nsmap={None: ns})  # type: ignore[dict-item]
    key = etree.SubElement(root, f"{{{ns}}}key")
    key.set("id", "label")
    key.set("for", "node")
    key.set("attr.name", "label")
    key.set("attr.type", "string")
    graph = etree.SubElement(root, f"{{{ns}}}graph")
    graph.set("id", "G")
    graph.set("edgedefault", "undirected")
    for v, label in enumerate(X.labels):
        node = etree.SubElement(graph, f"{{{ns}}}node")
        node.set("id", f"n{v}")
        data = etree.SubElement(node, f"{{{ns}}}data")
        data.set("key", "label")
        data.text = label
    for i, j in X.edges():
        edge = etree.SubElement(graph, f"{{{ns}}}edge")
        edge.set("source", f"n{i}")
        edge.set("target", f"n{j}")
    body = etree.tostring(root, encoding="unicode", pretty_print=pretty_print)
    return f'<?xml version="1.0" encoding="utf-8"?>\n{body}'


def export_graph(X: SimpleGraph, format: GraphFormat = "dot") -> str:
    """Serialize X in the requested format.

    Raises:
        ValueError: For an unknown format name
    """
    if format == "dot":
        return graph_to_dot(X)
    if format == "json":
        return graph_to_json(X)
    if format == "graphml":
        return graph_to_graphml(X)
    raise ValueError(f"Unknown graph format: {format!r}")


def save_graph(
    X: SimpleGraph, path: str | PathLike[str], format: GraphFormat = "dot"
) -> None:
    """Write X to a file.

    Args:
        X: The graph to save.
        path: File path to write to.
        format: One of "dot", "json" or "graphml".
    """
    Path(path).write_text(export_graph(X, format), encoding="utf-8")
