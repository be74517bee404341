"""Generalized Cayley subsets.

A subset S of G is a generalized Cayley subset for an involutory
automorphism alpha when S avoids omega and alpha(S^-1) = S. Those two
conditions make the relation "alpha(g^-1) h in S" symmetric and loop-free.
"""

from __future__ import annotations

import logging
from itertools import combinations

from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.errors import MeetsOmega, NotAbelian, NotAlphaSymmetric
from gencayley.gcs.partition import alpha_partition, check_involution, omega_element
from gencayley.groups.automorphisms import GroupMap, product_map
from gencayley.groups.group import ElementSet, FiniteGroup, direct_product, is_abelian

logger = logging.getLogger(__name__)


def check_gcs(G: FiniteGroup, alpha: GroupMap, S: ElementSet) -> None:
    """Check the two defining conditions of a generalized Cayley subset.

    Raises:
        NotInvolutory: If alpha^2 != id
        MeetsOmega: With witness (g, alpha(g^-1) g) for the least such g in S
        NotAlphaSymmetric: With the least s in S whose alpha(s^-1) is not in S
    """
    check_involution(G, alpha)
    for g in range(G.order):
        w = omega_element(G, alpha, g)
        if w in S:
            raise MeetsOmega(
                f"{G.names[w]} = alpha({G.names[g]}^-1){G.names[g]} lies in S",
                witness=(g, w),
            )
    for s in S.members:
        t = alpha.image[G.inv(s)]
        if t not in S:
            raise NotAlphaSymmetric(
                f"alpha({G.names[s]}^-1) = {G.names[t]} is not in S", witness=s
            )


class SubsetFacts(GCModel):
    """Consequences of validity that are worth reporting for a subset."""

    size: int
    in_big_omega: ElementSet
    in_mho: ElementSet
    mho_pairs: tuple[tuple[int, int], ...]
    odd_meets_big_omega: bool


class GCSubset(GCModel):
    """A validated generalized Cayley subset bound to its group and automorphism."""

    group: FiniteGroup
    alpha: GroupMap
    members: ElementSet

    @model_validator(mode="after")
    def _check_subset(self) -> GCSubset:
        check_gcs(self.group, self.alpha, self.members)
        return self

    def __repr__(self) -> str:
        return f"GCSubset({self.group}, {self.group.format_set(self.members)})"

    def __len__(self) -> int:
        return len(self.members)

    @property
    def names(self) -> list[str]:
        return [self.group.names[s] for s in self.members.members]

    def describe(self) -> str:
        return self.group.format_set(self.members)

    def facts(self) -> SubsetFacts:
        """Split S along the alpha-partition.

        For a valid S of odd size the big_omega part is never empty, and
        the mho part is a union of pairs {s, alpha(s^-1)}.
        """
        part = alpha_partition(self.group, self.alpha, allow_identity=True)
        in_big_omega = self.members & part.big_omega
        in_mho = self.members & part.mho
        pairs = tuple(p for p in part.mho_pairs() if p[0] in in_mho)
        return SubsetFacts(
            size=len(self.members),
            in_big_omega=in_big_omega,
            in_mho=in_mho,
            mho_pairs=pairs,
            odd_meets_big_omega=len(self.members) % 2 == 0 or not in_big_omega.is_empty,
        )


def validate_gcs(G: FiniteGroup, alpha: GroupMap, S: ElementSet) -> GCSubset:
    """Validate S against (G, alpha).

    Raises:
        NotInvolutory, MeetsOmega, NotAlphaSymmetric: On the first violation
    """
    check_gcs(G, alpha, S)
    return GCSubset.model_construct(group=G, alpha=alpha, members=S)


def enumerate_gcs(
    G: FiniteGroup, alpha: GroupMap, k: int, allow_identity: bool = False
) -> list[GCSubset]:
    """All valid subsets of size k, in ascending lexicographic member order.

    Elements of big_omega are chosen freely and elements of mho in whole
    pairs {s, alpha(s^-1)}, so alpha(S^-1) = S holds by construction.
    """
    if k < 1:
        raise ValueError(f"Subset size must be at least 1, got {k}")
    part = alpha_partition(G, alpha, allow_identity=allow_identity)
    singles = part.big_omega.members
    pairs = part.mho_pairs()
    found: set[tuple[int, ...]] = set()
    for p in range(k // 2 + 1):
        q = k - 2 * p
        if q > len(singles) or p > len(pairs):
            continue
        for chosen_singles in combinations(singles, q):
            for chosen_pairs in combinations(pairs, p):
                members = list(chosen_singles)
                for s, t in chosen_pairs:
                    members.extend((s, t))
                found.add(tuple(sorted(members)))
    subsets = [
        GCSubset(group=G, alpha=alpha, members=G.subset(m)) for m in sorted(found)
    ]
    logger.debug("%s: %d valid subsets of size %d", G, len(subsets), k)
    return subsets


def stabilizer_set(S: GCSubset) -> ElementSet:
    """G_alpha(S) = {g : alpha(g) g^-1 S = S} for abelian G.

    Raises:
        NotAbelian: If the group is not abelian
    """
    G, alpha = S.group, S.alpha
    if not is_abelian(G):
        raise NotAbelian(f"{G} is not abelian", witness=G.label)
    members = S.members.members
    result = []
    for g in range(G.order):
        w = G.table[alpha.image[g]][G.inv(g)]
        shifted = G.subset(G.table[w][s] for s in members)
        if shifted == S.members:
            result.append(g)
    return G.subset(result)


def conjugate_gcs(S: GCSubset, beta: GroupMap) -> GCSubset:
    """Transport S along beta: (beta(S), beta alpha beta^-1)."""
    alpha_beta = S.alpha.conjugate_by(beta)
    return validate_gcs(S.group, alpha_beta, beta.apply(S.members))


def product_subset(S1: GCSubset, S2: GCSubset) -> GCSubset:
    """S1 x S2 on G1 x G2 under alpha1 x alpha2."""
    G = direct_product(S1.group, S2.group)
    alpha = product_map(S1.alpha, S2.alpha, G)
    h = S2.group.order
    members = G.subset(
        s1 * h + s2 for s1 in S1.members.members for s2 in S2.members.members
    )
    return validate_gcs(G, alpha, members)
