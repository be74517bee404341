"""Tests for SimpleGraph and the Cayley-type constructions."""

from __future__ import annotations

from itertools import combinations_with_replacement

import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from gencayley.catalog import build_group
from gencayley.errors import NotAbelian, NotSquareFree, NotSymmetricSet
from gencayley.gcs import GCSubset, product_subset
from gencayley.graphs import (
    SimpleGraph,
    build_cayley_graph,
    build_cayley_sum_graph,
    build_gc_graph,
    complete_graph,
    direct_product_graph,
    is_connected,
    two_walk_graph,
)
from gencayley.groups import FiniteGroup

from ..conftest import make_cycle, make_gcs, make_graph, make_path, make_star, to_networkx

# Small GC instances, connected and disconnected; all 28 pairs are multiplied
PRODUCT_FACTORS = [
    ("D6", "a->a^-1, b->b", "b, a b, a^2 b"),
    ("D6", "a->a^-1, b->a^2 b", "b, a b, a^2 b"),
    ("D8", "a->a^3, b->b", "a, a^3"),
    ("Z2", "id", "g"),
    ("Z4", "inverse", "g"),
    ("Z5", "id", "1, 4"),
    ("Z6", "inverse", "1, 3, 5"),
]


class TestSimpleGraph:
    """Test the adjacency model and its accessors."""

    def test_from_edges(self):
        X = make_path(3)
        assert X.neighbors == ((1,), (0, 2), (1,))
        assert X.edges() == [(0, 1), (1, 2)]
        assert X.edge_count == 2
        assert X.labels == ("0", "1", "2")

    def test_degrees(self):
        assert make_cycle(5).regular_degree() == 2
        star = make_star(4)
        assert star.regular_degree() is None
        assert star.max_degree() == 4
        assert star.degree(0) == 4

    def test_to_numpy_round_trip(self):
        X = make_cycle(4)
        A = X.to_numpy()
        assert A.shape == (4, 4)
        assert (A == A.T).all()
        assert SimpleGraph.from_matrix(A, X.labels) == X

    def test_relabel(self):
        X = make_path(2).relabel(["x", "y"])
        assert X.labels == ("x", "y")
        assert X.edges() == [(0, 1)]

    def test_rejects_asymmetric_matrix(self):
        with pytest.raises(ValidationError) as exc_info:
            SimpleGraph(n=2, adjacency=((0, 1), (0, 0)), labels=("0", "1"))
        assert "not symmetric" in str(exc_info.value)

    def test_rejects_loop_unless_allowed(self):
        with pytest.raises(ValidationError):
            SimpleGraph(n=1, adjacency=((1,),), labels=("0",))
        X = SimpleGraph(n=1, adjacency=((1,),), labels=("0",), loops_allowed=True)
        assert X.has_loops

    def test_rejects_non_binary_entry(self):
        with pytest.raises(ValidationError):
            SimpleGraph(n=2, adjacency=((0, 2), (2, 0)), labels=("0", "1"))

    def test_rejects_wrong_label_count(self):
        with pytest.raises(ValidationError):
            SimpleGraph(n=2, adjacency=((0, 1), (1, 0)), labels=("0",))

    def test_complete_graph(self):
        K4 = complete_graph(4)
        assert K4.edge_count == 6
        assert K4.regular_degree() == 3


class TestGCGraph:
    """Test GC(G, S, alpha) against hand-derived structure."""

    def test_dihedral_is_complete_bipartite(self, d6: FiniteGroup):
        """Neighbours of a rotation are all reflections and conversely."""
        X = make_graph(d6, "a->a^-1, b->b", "b, a b, a^2 b")
        assert X.labels == d6.names
        assert X.edge_count == 9
        assert X.regular_degree() == 3
        assert X.neighbors[0] == (3, 4, 5)
        assert X.neighbors[3] == (0, 1, 2)

    def test_neighbourhood_formula(self, z14_bipartite: GCSubset):
        """N(g) = alpha(g) S, here -g + {1, 3, 5}."""
        X = build_gc_graph(z14_bipartite)
        for g in range(14):
            assert set(X.neighbors[g]) == {(-g + s) % 14 for s in (1, 3, 5)}

    def test_regular_and_loop_free(self, z2sq_z6_odd: GCSubset):
        X = build_gc_graph(z2sq_z6_odd)
        assert X.regular_degree() == 3
        assert not X.has_loops

    def test_matches_networkx_oracle(self, z14_bipartite: GCSubset):
        graph = to_networkx(build_gc_graph(z14_bipartite))
        assert graph.number_of_edges() == 21
        assert nx.is_connected(graph)
        assert nx.is_bipartite(graph)


class TestCayleyGraphs:
    """Test ordinary Cayley graphs and Cayley sum graphs."""

    def test_cayley_cycle(self):
        Z5 = build_group("Z5")
        X = build_cayley_graph(Z5, Z5.subset([1, 4]))
        assert nx.is_isomorphic(to_networkx(X), nx.cycle_graph(5))

    def test_cayley_needs_symmetric_set(self):
        Z5 = build_group("Z5")
        with pytest.raises(NotSymmetricSet) as exc_info:
            build_cayley_graph(Z5, Z5.subset([1]))
        assert exc_info.value.witness == 1

    def test_identity_gives_loops(self):
        Z3 = build_group("Z3")
        X = build_cayley_graph(Z3, Z3.subset([0]))
        assert X.has_loops
        assert X.edges() == [(0, 0), (1, 1), (2, 2)]

    def test_cayley_sum_equals_gc_with_inverse(self):
        Z6 = build_group("Z6")
        S = Z6.subset([1, 3, 5])
        assert build_cayley_sum_graph(Z6, S) == make_graph(Z6, "inverse", "1, 3, 5")

    def test_cayley_sum_needs_square_free(self):
        Z6 = build_group("Z6")
        with pytest.raises(NotSquareFree) as exc_info:
            build_cayley_sum_graph(Z6, Z6.subset([1, 2]))
        assert exc_info.value.witness == (1, 2)

    def test_cayley_sum_needs_abelian(self, d6: FiniteGroup):
        with pytest.raises(NotAbelian):
            build_cayley_sum_graph(d6, d6.subset([3]))


class TestGraphProducts:
    """Test the tensor product and the two-walk graph."""

    def test_direct_product(self):
        K2 = complete_graph(2)
        X = direct_product_graph(K2, K2)
        assert X.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
        assert X.edges() == [(0, 3), (1, 2)]

    def test_direct_product_matches_networkx(self):
        X = direct_product_graph(make_cycle(3), make_path(3))
        expected = nx.tensor_product(nx.cycle_graph(3), nx.path_graph(3))
        assert nx.is_isomorphic(to_networkx(X), expected)

    def test_two_walk_graph(self):
        W = two_walk_graph(make_path(3))
        assert W.loops_allowed
        assert W.neighbors == ((0, 2), (1,), (0, 2))
        np.testing.assert_array_equal(
            W.to_numpy(), (make_path(3).to_numpy() @ make_path(3).to_numpy() > 0)
        )

    @pytest.mark.parametrize(
        "first,second", list(combinations_with_replacement(PRODUCT_FACTORS, 2))
    )
    def test_product_of_gc_graphs(self, first, second):
        """The tensor product is the graph of the product data, vertex for vertex."""
        S1, S2 = make_gcs(*first), make_gcs(*second)
        X = direct_product_graph(build_gc_graph(S1), build_gc_graph(S2))
        assert X.adjacency == build_gc_graph(product_subset(S1, S2)).adjacency
        if is_connected(X):
            assert is_connected(build_gc_graph(S1)) and is_connected(build_gc_graph(S2))
