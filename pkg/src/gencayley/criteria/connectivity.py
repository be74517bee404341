"""Connectivity of GC(G, S, alpha) decided from subgroups generated by S.

With H = <SS^-1>, the graph is connected exactly when <S> = G,
|G:H| <= 2 and alpha(H) = H. The component of e is <S^-1 S> u <SS^-1>s
for any s in S, and 2-walks from e reach exactly <S^-1 S>.
"""

from __future__ import annotations

import logging
from collections import deque

from gencayley.criteria.verdicts import ConnectivityBranch, ConnectivityVerdict
from gencayley.errors import CriteriaDisagreement, EmptySubset
from gencayley.gcs.subsets import GCSubset
from gencayley.groups.group import (
    ElementSet,
    FiniteGroup,
    generated_subgroup,
    right_coset,
    set_inverse,
    set_product,
    subgroup_index,
)

logger = logging.getLogger(__name__)


def left_product_subgroup(S: GCSubset) -> ElementSet:
    """<S^-1 S>."""
    G = S.group
    return generated_subgroup(G, set_product(G, set_inverse(G, S.members), S.members))


def right_product_subgroup(S: GCSubset) -> ElementSet:
    """<SS^-1>."""
    G = S.group
    return generated_subgroup(G, set_product(G, S.members, set_inverse(G, S.members)))


def _subgroup_data(S: GCSubset) -> tuple[FiniteGroup, ElementSet, ElementSet, int, bool]:
    G = S.group
    generated = generated_subgroup(G, S.members)
    H = right_product_subgroup(S)
    return G, generated, H, subgroup_index(G, H), S.alpha.apply(H) == H


def connected_algebraic(S: GCSubset) -> ConnectivityVerdict:
    """Evaluate <S> = G, |G:<SS^-1>| <= 2 and alpha-invariance of <SS^-1>.

    The branch names the first condition that fails, or how the
    conditions hold (index 1 or index 2).
    """
    G, generated, H, index, invariant = _subgroup_data(S)
    if len(generated) != G.order:
        branch = ConnectivityBranch.FAILS_GENERATION
    elif index > 2:
        branch = ConnectivityBranch.FAILS_INDEX
    elif not invariant:
        branch = ConnectivityBranch.FAILS_ALPHA_INVARIANCE
    elif index == 1:
        branch = ConnectivityBranch.GENERATES_AND_FULL_PRODUCT
    else:
        branch = ConnectivityBranch.INDEX_TWO_COSET
    return ConnectivityVerdict(
        connected=branch.connected,
        branch=branch,
        criterion="generation",
        generated=generated,
        product_subgroup=H,
        index=index,
        alpha_invariant=invariant,
    )


def connected_coset_criterion(S: GCSubset) -> ConnectivityVerdict:
    """Right-coset form of the connectivity test.

    Connected iff S lies in no right coset of a proper subgroup, or S lies
    in the non-trivial coset of H = <SS^-1> with |G:H| = 2 and alpha(H) = H.
    Any coset Kg containing S forces <SS^-1> <= K, so H is the only
    candidate that needs testing.
    """
    G, generated, H, index, invariant = _subgroup_data(S)
    if index == 1:
        branch = ConnectivityBranch.GENERATES_AND_FULL_PRODUCT
    elif S.members.is_empty or S.members.first() in H:
        # S inside H itself, a proper subgroup
        branch = ConnectivityBranch.FAILS_GENERATION
    elif index > 2:
        branch = ConnectivityBranch.FAILS_INDEX
    elif not invariant:
        branch = ConnectivityBranch.FAILS_ALPHA_INVARIANCE
    else:
        branch = ConnectivityBranch.INDEX_TWO_COSET
    return ConnectivityVerdict(
        connected=branch.connected,
        branch=branch,
        criterion="coset",
        generated=generated,
        product_subgroup=H,
        index=index,
        alpha_invariant=invariant,
    )


def identity_component_algebraic(S: GCSubset) -> ElementSet:
    """The component of e as <S^-1 S> u <SS^-1>s, s the least member of S.

    The union is recomputed for every s in S and must not change.

    Raises:
        EmptySubset: If S is empty
        CriteriaDisagreement: If two choices of s give different sets
    """
    if S.members.is_empty:
        raise EmptySubset("The identity component formula needs a non-empty S")
    G = S.group
    A = left_product_subgroup(S)
    H = right_product_subgroup(S)
    members = S.members.members
    component = A | right_coset(G, H, members[0])
    for s in members[1:]:
        other = A | right_coset(G, H, s)
        if other != component:
            raise CriteriaDisagreement(
                f"Component formula depends on the choice of s: "
                f"{G.format_set(component)} vs {G.format_set(other)}",
                witness=(members[0], s),
            )
    return component


def theta_class(S: GCSubset) -> ElementSet:
    """Vertices reachable from e by walks of even length.

    A 2-walk x -> alpha(x)s -> x alpha(s)t moves x by alpha(s)t, and
    alpha(S) = S^-1, so the breadth-first search steps through S^-1 S.
    """
    G, image = S.group, S.alpha.image
    members = S.members.members
    moves = sorted({G.table[image[s]][t] for s in members for t in members})
    seen = 1
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for m in moves:
            y = G.table[x][m]
            if not seen >> y & 1:
                seen |= 1 << y
                queue.append(y)
    return ElementSet(order=G.order, mask=seen)


def verify_alpha_bridge(S: GCSubset) -> bool:
    """Whether alpha(<S^-1 S>) = <SS^-1>."""
    holds = S.alpha.apply(left_product_subgroup(S)) == right_product_subgroup(S)
    if not holds:
        logger.warning("alpha(<S^-1 S>) != <SS^-1> for %r", S)
    return holds
