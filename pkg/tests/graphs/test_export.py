"""Tests for DOT, JSON and GraphML output."""

from __future__ import annotations

import json

import pytest
from lxml import etree

from gencayley.graphs import (
    SimpleGraph,
    complete_graph,
    export_graph,
    graph_to_dict,
    graph_to_dot,
    graph_to_graphml,
    graph_to_json,
    save_graph,
)
from gencayley.graphs.export import GRAPHML_NAMESPACE

from ..conftest import make_graph, make_path

NS = {"g": GRAPHML_NAMESPACE}


class TestDot:
    def test_single_edge(self):
        assert graph_to_dot(complete_graph(2)) == 'graph { "0" -- "1"; }'

    def test_no_edges(self):
        assert graph_to_dot(SimpleGraph.from_edges(1, [])) == "graph { }"

    def test_uses_labels_in_edge_order(self):
        X = make_graph("D6", "a->a^-1, b->b", "b, a b, a^2 b")
        dot = graph_to_dot(X)
        assert dot.startswith('graph { "e" -- "b"; "e" -- "a b"; ')
        assert dot.count("--") == 9

    def test_escapes_quotes(self):
        X = make_path(2).relabel(['a"b', "c"])
        assert graph_to_dot(X) == 'graph { "a\\"b" -- "c"; }'


class TestJson:
    def test_structure(self):
        data = json.loads(graph_to_json(make_path(3)))
        assert data == {"n": 3, "labels": ["0", "1", "2"], "edges": [[0, 1], [1, 2]]}

    def test_dict_matches_json(self):
        X = make_path(2)
        assert json.loads(graph_to_json(X, indent=None)) == graph_to_dict(X)

    def test_unicode_labels(self):
        X = make_path(2).relabel(["α", "β"])
        assert '"α"' in graph_to_json(X)


class TestGraphml:
    def test_nodes_and_edges(self):
        text = graph_to_graphml(make_path(3))
        assert text.startswith('<?xml version="1.0" encoding="utf-8"?>')
        root = etree.fromstring(text.encode("utf-8"))
        assert root.tag == f"{{{GRAPHML_NAMESPACE}}}graphml"
        nodes = root.findall("g:graph/g:node", NS)
        edges = root.findall("g:graph/g:edge", NS)
        assert [n.get("id") for n in nodes] == ["n0", "n1", "n2"]
        assert [(e.get("source"), e.get("target")) for e in edges] == [("n0", "n1"), ("n1", "n2")]
        assert root.find("g:graph", NS).get("edgedefault") == "undirected"

    def test_labels_as_data(self):
        X = make_graph("D6", "a->a^-1, b->b", "b, a b, a^2 b")
        root = etree.fromstring(graph_to_graphml(X).encode("utf-8"))
        labels = [d.text for d in root.findall("g:graph/g:node/g:data", NS)]
        assert labels == list(X.labels)


class TestExportGraph:
    @pytest.mark.parametrize("fmt", ["dot", "json", "graphml"])
    def test_dispatch(self, fmt):
        X = complete_graph(3)
        expected = {"dot": graph_to_dot, "json": graph_to_json, "graphml": graph_to_graphml}
        assert export_graph(X, fmt) == expected[fmt](X)

    def test_unknown_format(self):
        with pytest.raises(ValueError) as exc_info:
            export_graph(complete_graph(2), "gml")  # type: ignore[arg-type]
        assert "Unknown graph format" in str(exc_info.value)

    def test_save(self, tmp_path):
        path = tmp_path / "k3.json"
        save_graph(complete_graph(3), path, format="json")
        assert json.loads(path.read_text(encoding="utf-8"))["edges"] == [[0, 1], [0, 2], [1, 2]]
