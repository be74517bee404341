"""The three-way split of a group induced by an involutory automorphism.

For alpha with alpha^2 = id:

- omega = {alpha(g^-1) g : g in G}, the elements no connection set may use;
- big_omega = elements outside omega with alpha(g) = g^-1;
- mho = elements with alpha(g) != g^-1, which enter connection sets in
  pairs {s, alpha(s^-1)}.
"""

from __future__ import annotations

from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.errors import NotAHomomorphism, NotInvolutory
from gencayley.groups.automorphisms import GroupMap
from gencayley.groups.group import ElementSet, FiniteGroup


def omega_element(G: FiniteGroup, alpha: GroupMap, g: int) -> int:
    """alpha(g^-1) g."""
    return G.table[alpha.image[G.inv(g)]][g]


def check_involution(G: FiniteGroup, alpha: GroupMap, allow_identity: bool = True) -> None:
    """Raise NotInvolutory unless alpha is an involutory automorphism of G."""
    if alpha.domain.table != G.table:
        raise NotAHomomorphism(f"Automorphism is defined on another group than {G}")
    image = alpha.image
    for g in range(G.order):
        if image[image[g]] != g:
            raise NotInvolutory(
                f"alpha(alpha({G.names[g]})) = {G.names[image[image[g]]]}, "
                f"expected {G.names[g]}",
                witness=g,
            )
    if not allow_identity and alpha.is_identity:
        raise NotInvolutory(
            "The identity automorphism gives an ordinary Cayley graph; "
            "pass allow_identity=True to use it",
            witness=0,
        )


def _partition_masks(G: FiniteGroup, alpha: GroupMap) -> tuple[int, int, int]:
    image = alpha.image
    inv = G.inverses
    omega = 0
    for g in range(G.order):
        omega |= 1 << G.table[image[inv[g]]][g]
    big_omega = mho = 0
    for g in range(G.order):
        if image[g] != inv[g]:
            mho |= 1 << g
        elif not omega >> g & 1:
            big_omega |= 1 << g
    return omega, big_omega, mho


class AlphaPartition(GCModel):
    """The sets omega, big_omega and mho of (G, alpha); they partition G."""

    group: FiniteGroup
    alpha: GroupMap
    omega: ElementSet
    big_omega: ElementSet
    mho: ElementSet

    @model_validator(mode="after")
    def _check_partition(self) -> AlphaPartition:
        expected = _partition_masks(self.group, self.alpha)
        actual = (self.omega.mask, self.big_omega.mask, self.mho.mask)
        if actual != expected:
            raise ValueError("Sets do not match the alpha-partition of the group")
        return self

    def __repr__(self) -> str:
        G = self.group
        return (
            f"AlphaPartition(omega={G.format_set(self.omega)}, "
            f"big_omega={G.format_set(self.big_omega)}, mho={G.format_set(self.mho)})"
        )

    def mho_pairs(self) -> list[tuple[int, int]]:
        """The orbits {s, alpha(s^-1)} of mho, as ascending pairs."""
        G, image = self.group, self.alpha.image
        pairs = set()
        for s in self.mho.members:
            t = image[G.inv(s)]
            pairs.add((min(s, t), max(s, t)))
        return sorted(pairs)


def alpha_partition(
    G: FiniteGroup, alpha: GroupMap, allow_identity: bool = False
) -> AlphaPartition:
    """Compute omega, big_omega and mho for an involutory automorphism.

    Raises:
        NotInvolutory: If alpha^2 != id, or alpha is the identity and
            allow_identity is False
    """
    check_involution(G, alpha, allow_identity=allow_identity)
    omega, big_omega, mho = _partition_masks(G, alpha)
    n = G.order
    return AlphaPartition(
        group=G,
        alpha=alpha,
        omega=ElementSet(order=n, mask=omega),
        big_omega=ElementSet(order=n, mask=big_omega),
        mho=ElementSet(order=n, mask=mho),
    )
