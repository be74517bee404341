"""Tests for the product criterion and the connected-graph equivalences."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from gencayley.catalog import catalog_of_order
from gencayley.criteria import (
    BipartiteEquivalence,
    BipartiteVerdict,
    bipartite_algebraic,
    bipartite_when_connected,
    check_bipartite_witness,
    connected_algebraic,
)
from gencayley.errors import CriteriaDisagreement, NotAbelian, NotConnected
from gencayley.gcs import GCSubset
from gencayley.graphs import build_gc_graph, is_bipartite
from gencayley.groups import FiniteGroup, involutory_automorphisms, is_abelian

from ..conftest import all_gcs, make_gcs


class TestBipartiteAlgebraic:
    """Test the parity search on abelian groups."""

    def test_bipartite_cyclic(self, z14_bipartite: GCSubset):
        verdict = bipartite_algebraic(z14_bipartite)
        assert verdict
        assert verdict.witness is None

    def test_odd_product_in_omega(self, z2sq_z6_odd: GCSubset):
        """(0,0,2) three times is the identity, which lies in omega."""
        verdict = bipartite_algebraic(z2sq_z6_odd)
        assert not verdict
        assert verdict.witness == ((2, 3),)
        assert verdict.product == 0

    def test_pentagon(self):
        S = make_gcs("Z5", "id", "1, 4")
        verdict = bipartite_algebraic(S)
        assert not verdict.bipartite
        assert sum(k for _, k in verdict.witness) % 2 == 1
        assert verdict.product == 0

    def test_agrees_with_colouring(self, z2sq_z6_odd: GCSubset, z14_bipartite: GCSubset):
        for S in (z2sq_z6_odd, z14_bipartite):
            assert bool(bipartite_algebraic(S)) == bool(is_bipartite(build_gc_graph(S)))

    def test_needs_abelian(self, d6: FiniteGroup):
        S = make_gcs(d6, "a->a^-1, b->b", "b, a b, a^2 b")
        with pytest.raises(NotAbelian):
            bipartite_algebraic(S)


class TestWitnessCheck:
    def test_bad_product(self, z2sq_z6_odd: GCSubset):
        forged = BipartiteVerdict(bipartite=False, witness=((2, 1),), product=0)
        with pytest.raises(CriteriaDisagreement):
            check_bipartite_witness(z2sq_z6_odd, forged)

    def test_member_outside_subset(self, z2sq_z6_odd: GCSubset):
        forged = BipartiteVerdict(bipartite=False, witness=((1, 1),), product=1)
        with pytest.raises(CriteriaDisagreement) as exc_info:
            check_bipartite_witness(z2sq_z6_odd, forged)
        assert exc_info.value.witness == 1

    def test_bipartite_verdict_is_not_checked(self, z14_bipartite: GCSubset):
        check_bipartite_witness(z14_bipartite, BipartiteVerdict(bipartite=True))

    def test_verdict_validation(self):
        with pytest.raises(ValidationError):
            BipartiteVerdict(bipartite=True, witness=((1, 1),), product=1)
        with pytest.raises(ValidationError):
            BipartiteVerdict(bipartite=False, witness=((1, 2),), product=2)
        with pytest.raises(ValidationError):
            BipartiteVerdict(bipartite=False)


class TestBipartiteWhenConnected:
    """Test the three equivalent conditions on connected graphs."""

    def test_complete_bipartite(self, d6: FiniteGroup):
        S = make_gcs(d6, "a->a^-1, b->b", "b, a b, a^2 b")
        result = bipartite_when_connected(S)
        assert result.bipartite
        assert result.by_half_index and result.by_disjointness

    def test_pentagon(self):
        result = bipartite_when_connected(make_gcs("Z5", "id", "1, 4"))
        assert not result.bipartite
        assert not result.by_graph
        assert not result.by_half_index
        assert not result.by_disjointness

    def test_disconnected(self, z2sq_z6_odd: GCSubset):
        with pytest.raises(NotConnected) as exc_info:
            bipartite_when_connected(z2sq_z6_odd)
        assert "FailsGeneration" in str(exc_info.value)

    def test_model_rejects_disagreement(self):
        with pytest.raises(ValidationError):
            BipartiteEquivalence(
                bipartite=True, by_graph=True, by_half_index=False, by_disjointness=True
            )


@pytest.mark.slow
@pytest.mark.parametrize("order", [4, 6, 8, 10, 12])
def test_bipartite_criteria_agree(order):
    """Product criterion (abelian) and the equivalences (connected) against 2-colouring."""
    for _, G in catalog_of_order(order):
        for alpha in involutory_automorphisms(G):
            for S in all_gcs(G, alpha):
                by_colouring = is_bipartite(build_gc_graph(S)).bipartite
                if is_abelian(G):
                    assert bipartite_algebraic(S).bipartite == by_colouring
                if connected_algebraic(S).connected:
                    assert bipartite_when_connected(S).bipartite == by_colouring
