"""Structured verdicts returned by the algebraic criteria."""

from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.groups.group import ElementSet


class ConnectivityBranch(str, Enum):
    """Which clause of the connectivity criterion decided the verdict."""

    GENERATES_AND_FULL_PRODUCT = "GeneratesAndFullProduct"
    INDEX_TWO_COSET = "IndexTwoCoset"
    FAILS_GENERATION = "FailsGeneration"
    FAILS_INDEX = "FailsIndex"
    FAILS_ALPHA_INVARIANCE = "FailsAlphaInvariance"

    @property
    def connected(self) -> bool:
        return self in (
            ConnectivityBranch.GENERATES_AND_FULL_PRODUCT,
            ConnectivityBranch.INDEX_TWO_COSET,
        )


class ConnectivityVerdict(GCModel):
    """Connectivity decided from <S> and H = <SS^-1>.

    Attributes:
        connected: The verdict
        branch: The clause that decided it
        criterion: "generation" for the three-condition test, "coset" for
            the right-coset form
        generated: <S>
        product_subgroup: H = <SS^-1>
        index: |G:H|
        alpha_invariant: Whether alpha(H) = H
    """

    connected: bool
    branch: ConnectivityBranch
    criterion: Literal["generation", "coset"] = "generation"
    generated: ElementSet
    product_subgroup: ElementSet
    index: int
    alpha_invariant: bool

    @model_validator(mode="after")
    def _check_branch(self) -> ConnectivityVerdict:
        n = self.generated.order
        if self.connected != self.branch.connected:
            raise ValueError(f"Branch {self.branch.value} contradicts connected={self.connected}")
        if self.index * len(self.product_subgroup) != n:
            raise ValueError("Index does not match the size of <SS^-1>")
        generates = len(self.generated) == n
        consistent = {
            ConnectivityBranch.GENERATES_AND_FULL_PRODUCT: generates and self.index == 1,
            ConnectivityBranch.INDEX_TWO_COSET: (
                generates and self.index == 2 and self.alpha_invariant
            ),
            ConnectivityBranch.FAILS_GENERATION: not generates,
            ConnectivityBranch.FAILS_INDEX: self.index > 2,
            ConnectivityBranch.FAILS_ALPHA_INVARIANCE: (
                self.index <= 2 and not self.alpha_invariant
            ),
        }[self.branch]
        if not consistent:
            raise ValueError(f"Branch {self.branch.value} is inconsistent with the subgroup data")
        return self

    def __bool__(self) -> bool:
        return self.connected


class BipartiteVerdict(GCModel):
    """Bipartiteness from odd products landing in omega.

    When not bipartite, `witness` lists (s, k_s) pairs with an odd total
    exponent whose product `product` lies in omega.
    """

    bipartite: bool
    witness: tuple[tuple[int, int], ...] | None = None
    product: int | None = None

    @model_validator(mode="after")
    def _check_witness(self) -> BipartiteVerdict:
        if self.bipartite:
            if self.witness is not None or self.product is not None:
                raise ValueError("A bipartite verdict carries no witness")
            return self
        if self.witness is None or self.product is None:
            raise ValueError("A non-bipartite verdict needs a witness and its product")
        if any(k < 1 for _, k in self.witness):
            raise ValueError("Witness exponents must be positive")
        if sum(k for _, k in self.witness) % 2 == 0:
            raise ValueError("Witness exponent sum must be odd")
        return self

    def __bool__(self) -> bool:
        return self.bipartite


class BipartiteEquivalence(GCModel):
    """The three equivalent bipartiteness conditions of a connected graph."""

    bipartite: bool
    by_graph: bool
    by_half_index: bool
    by_disjointness: bool

    @model_validator(mode="after")
    def _check_agreement(self) -> BipartiteEquivalence:
        if not self.bipartite == self.by_graph == self.by_half_index == self.by_disjointness:
            raise ValueError("Bipartiteness conditions disagree")
        return self
