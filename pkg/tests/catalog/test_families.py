"""Tests for the concrete group families."""

from __future__ import annotations

import pytest

from gencayley.catalog import families
from gencayley.catalog.families import cycle_name
from gencayley.errors import UnsupportedOrder
from gencayley.groups import center, find_isomorphism, is_abelian, order_histogram


class TestCyclicAndProducts:
    """Test the abelian constructors."""

    def test_cyclic(self):
        Z5 = families.cyclic(5)
        assert Z5.names == ("0", "1", "2", "3", "4")
        assert Z5.generators == (("g", 1),)
        assert Z5.mul(3, 4) == 2
        assert Z5.label == "Z5"

    def test_trivial_group(self):
        Z1 = families.cyclic(1)
        assert Z1.order == 1
        assert Z1.generators == ()

    def test_elementary_abelian(self):
        G = families.elementary_abelian_2(3)
        assert G.order == 8
        assert len(G.factors) == 3
        assert all(o <= 2 for o in G.element_orders)

    def test_cyclic_too_large(self):
        with pytest.raises(UnsupportedOrder):
            families.cyclic(65)


class TestPresentationFamilies:
    """Test the groups realized on normal forms a^i b^j."""

    @pytest.mark.parametrize("order", [4, 6, 8, 10, 12, 20, 24, 30])
    def test_dihedral(self, order):
        G = families.dihedral(order)
        assert G.order == order
        assert G.label == f"D{order}"
        a, b = G.index_of("a"), G.index_of("b")
        assert G.element_orders[a] == order // 2
        assert G.element_orders[b] == 2
        assert G.mul(G.mul(b, a), b) == G.inv(a)

    @pytest.mark.parametrize("order", [8, 12, 20, 24])
    def test_dicyclic(self, order):
        G = families.dicyclic(order)
        a, b = G.index_of("a"), G.index_of("b")
        assert G.element_orders[a] == order // 2
        assert G.element_orders[b] == 4
        assert G.power(a, order // 4) == G.power(b, 2)
        # Exactly one involution
        assert order_histogram(G)[2] == 1

    def test_quaternion(self):
        Q8 = families.quaternion()
        assert Q8.label == "Q8"
        assert order_histogram(Q8) == {1: 1, 2: 1, 4: 6}

    def test_f54(self):
        G = families.f54()
        a, b = G.index_of("a"), G.index_of("b")
        assert G.order == 20
        assert G.element_orders[a] == 5
        assert G.element_orders[b] == 4
        assert G.mul(G.mul(G.inv(b), a), b) == G.power(a, 2)
        assert len(center(G)) == 1

    @pytest.mark.parametrize(
        "factory,order", [(families.u24, 24), (families.u30, 30), (families.v24, 24)]
    )
    def test_other_presentations(self, factory, order):
        G = factory()
        assert G.order == order
        assert not is_abelian(G)

    def test_u_group_relator(self):
        G = families.u24()
        a, b = G.index_of("a"), G.index_of("b")
        assert G.mul(G.mul(G.inv(a), b), a) == G.inv(b)

    def test_dihedral_too_large(self):
        with pytest.raises(UnsupportedOrder):
            families.dihedral(130)


class TestMatrixAndPermutationGroups:
    """Test SL(2,3) and the permutation groups."""

    def test_sl23(self):
        G = families.sl23()
        assert G.order == 24
        assert G.names[0] == "[[1,0],[0,1]]"
        assert order_histogram(G) == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
        assert len(center(G)) == 2

    def test_cycle_names(self):
        assert cycle_name([0, 1, 2]) == "e"
        assert cycle_name([1, 0, 3, 2]) == "(1 2)(3 4)"
        assert cycle_name([1, 2, 0]) == "(1 2 3)"
        assert cycle_name([0, 3, 1, 2]) == "(2 4 3)"

    def test_symmetric(self):
        S3 = families.symmetric(3)
        assert S3.order == 6
        assert "(1 2)" in S3.names
        assert find_isomorphism(S3, families.dihedral(6)) is not None

    def test_alternating(self):
        A4 = families.alternating(4)
        assert A4.order == 12
        assert order_histogram(A4) == {1: 1, 2: 3, 3: 8}
        assert find_isomorphism(A4, families.dicyclic(12)) is None

    def test_composition_left_to_right(self):
        """(1 2) then (1 3) is (1 2 3)."""
        S3 = families.symmetric(3)
        x = S3.mul(S3.index_of("(1 2)"), S3.index_of("(1 3)"))
        assert S3.names[x] == "(1 2 3)"

    def test_symmetric_too_large(self):
        with pytest.raises(UnsupportedOrder):
            families.symmetric(5)
