"""Automorphisms of finite groups.

Automorphisms are found by generator-image backtracking: fix a greedy
generating set, try every assignment of images with matching element
orders, and keep the assignments that extend to a bijective homomorphism.
Internally maps travel as plain image tuples; `GroupMap` wraps the ones
handed back to callers.
"""

from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.errors import NotAHomomorphism, OrderLimitExceeded
from gencayley.groups.group import (
    MAX_GROUP_ORDER,
    ElementSet,
    FiniteGroup,
    generated_subgroup,
    minimal_generating_set,
)

logger = logging.getLogger(__name__)

Images = tuple[int, ...]


class GroupMap(GCModel):
    """A bijective homomorphism of a group onto itself.

    Attributes:
        domain: The group acted on
        image: image[i] is the index of the image of g_i
    """

    domain: FiniteGroup
    image: tuple[int, ...]

    @model_validator(mode="after")
    def _check_automorphism(self) -> GroupMap:
        check_automorphism(self.domain, self.image)
        return self

    def __repr__(self) -> str:
        return f"GroupMap({self.domain.label or self.domain.order}, {self.image})"

    def __call__(self, i: int) -> int:
        return self.image[i]

    def apply(self, A: ElementSet) -> ElementSet:
        """Image of a set."""
        return ElementSet.of(A.order, (self.image[a] for a in A.members))

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    @property
    def is_involution(self) -> bool:
        image = self.image
        return all(image[image[i]] == i for i in range(len(image)))

    def _derived(self, image: Images) -> GroupMap:
        # Products and inverses of automorphisms need no re-check
        return GroupMap.model_construct(domain=self.domain, image=image)

    def compose(self, other: GroupMap) -> GroupMap:
        """The map self o other (apply other first)."""
        return self._derived(tuple(self.image[x] for x in other.image))

    def inverse(self) -> GroupMap:
        return self._derived(_invert(self.image))

    def conjugate_by(self, beta: GroupMap) -> GroupMap:
        """The map beta o self o beta^-1."""
        return self._derived(_conjugate(self.image, beta.image))

    def describe(self, generators: Sequence[int] | None = None) -> str:
        """Render "x->y" pairs for the named (or given) generators."""
        G = self.domain
        if generators is None:
            generators = [i for _, i in G.generators] or list(minimal_generating_set(G))
        return ", ".join(
            f"{G.names[g]}->{G.names[self.image[g]]}" for g in generators
        )


def check_automorphism(G: FiniteGroup, image: Sequence[int]) -> None:
    """Raise NotAHomomorphism unless `image` is a bijective homomorphism of G."""
    n = G.order
    if len(image) != n:
        raise NotAHomomorphism(
            f"Image array has length {len(image)}, expected {n}", witness=None
        )
    if sorted(image) != list(range(n)):
        raise NotAHomomorphism("Image array is not a permutation", witness=None)
    if image[0] != 0:
        raise NotAHomomorphism("Identity is not fixed", witness=0)
    t = G.table
    for i in range(n):
        row_i = t[i]
        row_img = t[image[i]]
        for j in range(n):
            if image[row_i[j]] != row_img[image[j]]:
                raise NotAHomomorphism(
                    f"Homomorphism fails on ({G.names[i]}, {G.names[j]})",
                    witness=(i, j),
                )


def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(domain=G, image=tuple(range(G.order)))


def inverse_map(G: FiniteGroup) -> GroupMap:
    """The inversion map g -> g^-1.

    Raises:
        NotAHomomorphism: If G is not abelian
    """
    check_automorphism(G, G.inverses)
    return GroupMap(domain=G, image=G.inverses)


def inner_automorphism(G: FiniteGroup, g: int) -> GroupMap:
    """Conjugation x -> g x g^-1."""
    gi = G.inv(g)
    return GroupMap(
        domain=G, image=tuple(G.table[G.table[g][x]][gi] for x in range(G.order))
    )


def _invert(image: Images) -> Images:
    inverse = [0] * len(image)
    for i, x in enumerate(image):
        inverse[x] = i
    return tuple(inverse)


def _conjugate(alpha: Images, beta: Images) -> Images:
    # (beta alpha beta^-1)(beta(x)) = beta(alpha(x))
    result = [0] * len(alpha)
    for x in range(len(alpha)):
        result[beta[x]] = beta[alpha[x]]
    return tuple(result)


def _extend(
    G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], imgs: Sequence[int]
) -> Images | None:
    """Extend generator images to a homomorphism G -> H, or None.

    Walks the Cayley graph of G on `gens` breadth-first, assigning
    f(x g) = f(x) f(g) and rejecting the first conflicting edge. Consistency
    on every edge makes f a homomorphism.
    """
    n = G.order
    f = [-1] * n
    f[0] = 0
    queue = deque([0])
    pairs = list(zip(gens, imgs))
    while queue:
        x = queue.popleft()
        row_x = G.table[x]
        row_fx = H.table[f[x]]
        for g, fg in pairs:
            y = row_x[g]
            fy = row_fx[fg]
            if f[y] == -1:
                f[y] = fy
                queue.append(y)
            elif f[y] != fy:
                return None
    if -1 in f:
        return None
    return tuple(f)


def _search_isomorphisms(G: FiniteGroup, H: FiniteGroup) -> Iterator[Images]:
    """Yield every isomorphism G -> H as an image tuple, in lexicographic order
    of the generator images."""
    if G.order != H.order:
        return
    gens = minimal_generating_set(G)
    g_orders = G.element_orders
    h_orders = H.element_orders
    candidates = [
        [h for h in range(H.order) if h_orders[h] == g_orders[g]] for g in gens
    ]

    def backtrack(depth: int, chosen: list[int], closure: ElementSet) -> Iterator[Images]:
        if depth == len(gens):
            f = _extend(G, H, gens, chosen)
            if f is not None and len(set(f)) == G.order:
                yield f
            return
        for h in candidates[depth]:
            # g_depth lies outside the span of the earlier generators, so an
            # injective image must lie outside the span of their images.
            if h in closure:
                continue
            chosen.append(h)
            yield from backtrack(
                depth + 1, chosen, generated_subgroup(H, H.subset(chosen))
            )
            chosen.pop()

    yield from backtrack(0, [], ElementSet.of(H.order, [0]))


def _require_searchable(G: FiniteGroup) -> None:
    if G.order > MAX_GROUP_ORDER:
        raise OrderLimitExceeded(
            f"Automorphism search is limited to order {MAX_GROUP_ORDER}, "
            f"{G} has order {G.order}"
        )


@lru_cache(maxsize=128)
def _automorphism_images(G: FiniteGroup) -> tuple[Images, ...]:
    images = tuple(sorted(_search_isomorphisms(G, G)))
    logger.debug("%s has %d automorphisms", G, len(images))
    return images


def automorphism_group(G: FiniteGroup) -> list[GroupMap]:
    """All automorphisms of G, sorted by image array.

    Raises:
        OrderLimitExceeded: If |G| > 64
    """
    _require_searchable(G)
    return [GroupMap(domain=G, image=f) for f in _automorphism_images(G)]


def _involution_images(G: FiniteGroup, include_identity: bool) -> list[Images]:
    ident = tuple(range(G.order))
    return [
        f
        for f in _automorphism_images(G)
        if all(f[f[i]] == i for i in range(G.order))
        and (include_identity or f != ident)
    ]


def involutory_automorphisms(
    G: FiniteGroup, include_identity: bool = False
) -> list[GroupMap]:
    """Automorphisms with alpha o alpha = id, identity excluded by default.

    Raises:
        OrderLimitExceeded: If |G| > 64
    """
    _require_searchable(G)
    return [GroupMap(domain=G, image=f) for f in _involution_images(G, include_identity)]


def involution_conjugacy_classes(G: FiniteGroup) -> list[list[GroupMap]]:
    """Aut(G)-conjugacy classes of the non-identity involutory automorphisms.

    Each class is sorted by image array, so its first member is the
    lexicographically smallest representative; classes are ordered by
    representative.

    Raises:
        OrderLimitExceeded: If |G| > 64
    """
    _require_searchable(G)
    auts = _automorphism_images(G)
    remaining = set(_involution_images(G, include_identity=False))
    classes: list[list[Images]] = []
    for alpha in sorted(remaining):
        if alpha not in remaining:
            continue
        orbit = {_conjugate(alpha, beta) for beta in auts}
        remaining -= orbit
        classes.append(sorted(orbit))
    logger.debug("%s has %d involution classes", G, len(classes))
    return [[GroupMap(domain=G, image=f) for f in cls] for cls in classes]


def extend_to_automorphism(G: FiniteGroup, images: Mapping[int, int]) -> GroupMap:
    """Extend generator images to an automorphism of G.

    Args:
        G: The group
        images: Map from element index to image index; the keys must
            generate G

    Raises:
        NotAHomomorphism: If the keys do not generate G or the assignment
            does not extend to a bijective homomorphism
    """
    gens = list(images)
    if len(generated_subgroup(G, G.subset(gens))) != G.order:
        raise NotAHomomorphism(
            "Mapped elements "
            + ", ".join(G.names[g] for g in gens)
            + f" do not generate {G}",
            witness=tuple(gens),
        )
    f = _extend(G, G, gens, [images[g] for g in gens])
    if f is None or len(set(f)) != G.order:
        raise NotAHomomorphism(
            "Generator images "
            + ", ".join(f"{G.names[g]}->{G.names[images[g]]}" for g in gens)
            + " do not extend to an automorphism",
            witness=tuple(images.items()),
        )
    return GroupMap(domain=G, image=f)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """An isomorphism G -> H as an image tuple, or None.

    Raises:
        OrderLimitExceeded: If either group exceeds order 64
    """
    _require_searchable(G)
    _require_searchable(H)
    return next(_search_isomorphisms(G, H), None)


def product_map(alpha: GroupMap, beta: GroupMap, product: FiniteGroup) -> GroupMap:
    """The map alpha x beta on `product`, built as direct_product(alpha.domain, beta.domain)."""
    h = beta.domain.order
    image = tuple(
        alpha.image[i] * h + beta.image[j]
        for i in range(alpha.domain.order)
        for j in range(h)
    )
    return GroupMap(domain=product, image=image)
