"""Pytest configuration and shared fixtures."""

from __future__ import annotations

import networkx as nx
import pytest

from gencayley.catalog import build_group
from gencayley.census.report import CensusRow
from gencayley.gcs import GCSubset, enumerate_gcs, validate_gcs
from gencayley.graphs import SimpleGraph, build_gc_graph
from gencayley.groups import FiniteGroup, GroupMap
from gencayley.parsers import parse_alpha, parse_subset

Z2_CUBED_ALPHA = "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)"


@pytest.fixture
def d6() -> FiniteGroup:
    return build_group("D6")


@pytest.fixture
def d8() -> FiniteGroup:
    return build_group("D8")


@pytest.fixture
def z14() -> FiniteGroup:
    return build_group("Z14")


@pytest.fixture
def z2_cubed() -> FiniteGroup:
    return build_group("Z2^3")


@pytest.fixture
def z14_bipartite() -> GCSubset:
    """GC(Z14, {g, g^3, g^5}, inverse): connected and bipartite."""
    return make_gcs("Z14", "inverse", "g, g^3, g^5")


@pytest.fixture
def z2sq_z6_odd() -> GCSubset:
    """A subset of Z2^2 x Z6 with (0,0,2)^3 = e in omega: not bipartite."""
    return make_gcs(
        "Z2^2 x Z6",
        Z2_CUBED_ALPHA,
        "(1,0,0), (0,0,2), (0,0,4)",
    )


def make_gcs(group: str | FiniteGroup, alpha: str, subset: str) -> GCSubset:
    """Build and validate (G, alpha, S) from their text forms.

    Args:
        group: Group expression or an already built group
        alpha: Automorphism specification, e.g. "a->a^-1, b->b"
        subset: Connection set, e.g. "b, a b, a^2 b"
    """
    G = build_group(group) if isinstance(group, str) else group
    return validate_gcs(G, parse_alpha(G, alpha), parse_subset(G, subset))


def make_graph(group: str | FiniteGroup, alpha: str, subset: str) -> SimpleGraph:
    """GC(G, S, alpha) from text forms."""
    return build_gc_graph(make_gcs(group, alpha, subset))


def all_gcs(G: FiniteGroup, alpha: GroupMap) -> list[GCSubset]:
    """Every non-empty valid subset for (G, alpha), ordered by size."""
    return [S for k in range(1, G.order + 1) for S in enumerate_gcs(G, alpha, k)]


def make_cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_star(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def make_row(**kwargs) -> CensusRow:
    """Create a passing CensusRow with optional overrides."""
    defaults = {
        "group": "Z6",
        "order": 6,
        "alpha_class": 0,
        "alpha": "g->5",
        "subset": "{1, 3, 5}",
        "connected": True,
        "bipartite": True,
        "integral": True,
        "roots": (3, 0, 0, 0, 0, -3),
        "branch": "IndexTwoCoset",
    }
    defaults.update(kwargs)
    return CensusRow(**defaults)


def to_networkx(X: SimpleGraph) -> nx.Graph:
    """Independent copy of X for oracle checks."""
    graph = nx.Graph()
    graph.add_nodes_from(range(X.n))
    graph.add_edges_from(X.edges())
    return graph
