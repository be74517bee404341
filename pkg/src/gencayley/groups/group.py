"""Finite groups as explicit multiplication tables.

A `FiniteGroup` stores the full Cayley table of a group whose identity
sits at index 0. Subsets of a group are `ElementSet` bit-sets. All the
set arithmetic used by the criteria (products, inverses, cosets, generated
subgroups) lives here and works on element indices.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from functools import cached_property
from typing import Iterable, Sequence

from pydantic import Field, field_validator, model_validator

from gencayley._base import GCModel
from gencayley.errors import (
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    UnknownElement,
)

logger = logging.getLogger(__name__)

MAX_GROUP_ORDER = 64


def check_group_table(table: Sequence[Sequence[int]]) -> None:
    """Check that `table` is the Cayley table of a group with identity 0.

    Checks run in a fixed order (shape, Latin square, identity, inverses,
    associativity) and stop at the first violation.

    Raises:
        NotLatinSquare: Table is not square, has out-of-range entries, or
            repeats an entry in a row or column
        NoIdentity: Row or column 0 is not the identity permutation
        NoInverse: Some element has no two-sided inverse
        NotAssociative: First triple (i, j, k) breaking associativity
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("Multiplication table is empty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(
                f"Row {i} has length {len(row)}, expected {n}", witness=(i,)
            )
        for j, entry in enumerate(row):
            if not 0 <= entry < n:
                raise NotLatinSquare(
                    f"Entry table[{i}][{j}]={entry} is out of range 0..{n - 1}",
                    witness=(i, j),
                )

    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            raise NotLatinSquare(f"Row {i} repeats an element", witness=(i,))
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise NotLatinSquare(f"Column {j} repeats an element", witness=(j,))

    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise NoIdentity(
                f"Index 0 is not a two-sided identity for element {i}", witness=i
            )

    for i in range(n):
        right = table[i].index(0)
        if table[right][i] != 0:
            raise NoInverse(f"Element {i} has no two-sided inverse", witness=i)

    for i in range(n):
        row_i = table[i]
        for j in range(n):
            ij = row_i[j]
            row_j = table[j]
            row_ij = table[ij]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    raise NotAssociative(
                        f"Associativity fails for elements ({i}, {j}, {k})",
                        witness=(i, j, k),
                    )


class FiniteGroup(GCModel):
    """A finite group given by its multiplication table.

    Attributes:
        order: Number of elements
        table: table[i][j] is the index of g_i * g_j
        names: Display name of every element, identity first
        identity_index: Always 0
        label: Name of the group ("D8", "Z2^2 x Z6", ...), may be empty
        generators: Named generators used when parsing words, e.g. ("a", 1)
        factors: Flattened direct-product factors; empty for non-products
    """

    order: int = Field(ge=1)
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity_index: int = 0
    label: str = ""
    generators: tuple[tuple[str, int], ...] = ()
    factors: tuple[FiniteGroup, ...] = ()

    @field_validator("identity_index")
    @classmethod
    def _identity_is_zero(cls, v: int) -> int:
        if v != 0:
            raise NoIdentity(f"identity_index must be 0, got {v}", witness=v)
        return v

    @model_validator(mode="after")
    def _check_table(self) -> FiniteGroup:
        if len(self.table) != self.order:
            raise NotLatinSquare(
                f"Table has {len(self.table)} rows but order is {self.order}"
            )
        if len(self.names) != self.order:
            raise ValueError(
                f"Expected {self.order} element names, got {len(self.names)}"
            )
        if len(set(self.names)) != self.order:
            duplicates = [n for n, c in Counter(self.names).items() if c > 1]
            raise ValueError(f"Element names are not unique: {duplicates}")
        check_group_table(self.table)
        for name, index in self.generators:
            if not 0 <= index < self.order:
                raise ValueError(f"Generator '{name}' has index {index} out of range")
        if self.factors:
            size = 1
            for factor in self.factors:
                size *= factor.order
            if size != self.order:
                raise ValueError(
                    f"Factor orders multiply to {size}, group order is {self.order}"
                )
        return self

    def __repr__(self) -> str:
        return f"FiniteGroup(label={self.label!r}, order={self.order})"

    def __str__(self) -> str:
        return self.label or f"group of order {self.order}"

    def mul(self, i: int, j: int) -> int:
        """Return the index of g_i * g_j."""
        return self.table[i][j]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        """Index of the inverse of every element."""
        return tuple(row.index(0) for row in self.table)

    def inv(self, i: int) -> int:
        """Return the index of g_i^-1."""
        return self.inverses[i]

    def power(self, i: int, k: int) -> int:
        """Return the index of g_i^k for any integer k."""
        if k < 0:
            i, k = self.inv(i), -k
        result = 0
        for _ in range(k % self.element_orders[i]):
            result = self.table[result][i]
        return result

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        """Order of every element."""
        orders = []
        for i in range(self.order):
            k, x = 1, i
            while x != 0:
                x = self.table[x][i]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def name_lookup(self) -> dict[str, int]:
        return {_squash(name): i for i, name in enumerate(self.names)}

    def index_of(self, name: str) -> int:
        """Look up an element by its canonical name, ignoring whitespace.

        Raises:
            UnknownElement: If no element has that name
        """
        try:
            return self.name_lookup[_squash(name)]
        except KeyError:
            raise UnknownElement(
                f"No element named '{name}' in {self}", witness=name
            ) from None

    def coordinates(self, i: int) -> tuple[int, ...]:
        """Mixed-radix coordinates of element i over the flattened factors."""
        if not self.factors:
            return (i,)
        digits = []
        for factor in reversed(self.factors):
            i, digit = divmod(i, factor.order)
            digits.append(digit)
        return tuple(reversed(digits))

    def from_coordinates(self, coords: Sequence[int]) -> int:
        """Inverse of `coordinates`."""
        if not self.factors:
            return coords[0]
        index = 0
        for factor, digit in zip(self.factors, coords):
            index = index * factor.order + digit
        return index

    def subset(self, indices: Iterable[int]) -> ElementSet:
        """Build an ElementSet of this group from element indices."""
        return ElementSet.of(self.order, indices)

    def named_subset(self, names: Iterable[str]) -> ElementSet:
        """Build an ElementSet from canonical element names."""
        return self.subset(self.index_of(n) for n in names)

    def format_set(self, elements: ElementSet) -> str:
        """Render an ElementSet as "{x, y, ...}" in ascending index order."""
        return "{" + ", ".join(self.names[i] for i in elements.members) + "}"


def _squash(text: str) -> str:
    return "".join(text.split())


class ElementSet(GCModel):
    """A subset of a group, stored as a bit-set over element indices."""

    order: int = Field(ge=1)
    mask: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _mask_in_range(self) -> ElementSet:
        if self.mask >> self.order:
            raise ValueError(
                f"Bit-set {self.mask:#x} has members outside 0..{self.order - 1}"
            )
        return self

    @classmethod
    def of(cls, order: int, indices: Iterable[int]) -> ElementSet:
        """Build a set from element indices."""
        mask = 0
        for i in indices:
            if not 0 <= i < order:
                raise ValueError(f"Element index {i} outside 0..{order - 1}")
            mask |= 1 << i
        return cls(order=order, mask=mask)

    @classmethod
    def full(cls, order: int) -> ElementSet:
        return cls(order=order, mask=(1 << order) - 1)

    @cached_property
    def members(self) -> tuple[int, ...]:
        """Member indices in ascending order."""
        mask, result, i = self.mask, [], 0
        while mask:
            if mask & 1:
                result.append(i)
            mask >>= 1
            i += 1
        return tuple(result)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 0 <= i < self.order and bool(self.mask >> i & 1)

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(order=self.order, mask=self.mask | other.mask)

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(order=self.order, mask=self.mask & other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        return ElementSet(order=self.order, mask=self.mask & ~other.mask)

    def issubset(self, other: ElementSet) -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: ElementSet) -> bool:
        return self.mask & other.mask == 0

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def first(self) -> int:
        """Least member index."""
        if not self.mask:
            raise ValueError("Empty element set has no least member")
        return (self.mask & -self.mask).bit_length() - 1


def validate_group(
    table: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    *,
    label: str = "",
    generators: Sequence[tuple[str, int]] = (),
) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a FiniteGroup.

    Args:
        table: Square index matrix, table[i][j] = index of g_i * g_j
        names: Element names; defaults to "0", "1", ...
        label: Optional group name
        generators: Optional named generators for word parsing

    Returns:
        The validated group.

    Raises:
        NotLatinSquare, NoIdentity, NoInverse, NotAssociative: On the first
            violated group axiom, naming the witness
    """
    check_group_table(table)
    n = len(table)
    if names is None:
        names = [str(i) for i in range(n)]
    return FiniteGroup(
        order=n,
        table=tuple(tuple(row) for row in table),
        names=tuple(names),
        label=label,
        generators=tuple(generators),
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Direct product G x H with componentwise multiplication.

    Element (i, j) gets index i*|H| + j. Factors are flattened, so the
    names of Z2 x Z2 x Z6 read "(1,0,2)" rather than "((1,0),2)".
    """
    h = H.order
    table = tuple(
        tuple(
            G.table[i1][i2] * h + H.table[j1][j2]
            for i2 in range(G.order)
            for j2 in range(h)
        )
        for i1 in range(G.order)
        for j1 in range(h)
    )
    g_factors = G.factors or (G,)
    h_factors = H.factors or (H,)
    factors = g_factors + h_factors
    names = []
    for i in range(G.order):
        g_names = _coordinate_names(G, i)
        for j in range(h):
            names.append("(" + ",".join(g_names + _coordinate_names(H, j)) + ")")
    label = f"{G.label} x {H.label}" if G.label and H.label else ""
    return FiniteGroup(
        order=G.order * h,
        table=table,
        names=tuple(names),
        label=label,
        factors=factors,
    )


def _coordinate_names(G: FiniteGroup, i: int) -> list[str]:
    if not G.factors:
        return [G.names[i]]
    return [f.names[c] for f, c in zip(G.factors, G.coordinates(i))]


def generated_subgroup(G: FiniteGroup, T: ElementSet) -> ElementSet:
    """Subgroup generated by T: breadth-first closure of T and e under products."""
    gens = T.members
    seen = 1  # identity
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = G.table[x]
        for t in gens:
            y = row[t]
            if not seen >> y & 1:
                seen |= 1 << y
                queue.append(y)
    return ElementSet(order=G.order, mask=seen)


def set_product(G: FiniteGroup, A: ElementSet, B: ElementSet) -> ElementSet:
    """The product set AB = {ab : a in A, b in B}."""
    mask = 0
    b_members = B.members
    for a in A.members:
        row = G.table[a]
        for b in b_members:
            mask |= 1 << row[b]
    return ElementSet(order=G.order, mask=mask)


def set_inverse(G: FiniteGroup, A: ElementSet) -> ElementSet:
    """The set A^-1 of inverses."""
    return G.subset(G.inv(a) for a in A.members)


def is_subgroup(G: FiniteGroup, H: ElementSet) -> bool:
    """Whether H is non-empty and closed under products (hence a subgroup)."""
    if 0 not in H:
        return False
    members = H.members
    return all(G.table[x][y] in H for x in members for y in members)


def _require_subgroup(G: FiniteGroup, H: ElementSet) -> None:
    if not is_subgroup(G, H):
        raise NotASubgroup(
            f"{G.format_set(H)} is not a subgroup of {G}", witness=H.members
        )


def right_coset(G: FiniteGroup, H: ElementSet, g: int) -> ElementSet:
    """The right coset Hg.

    Raises:
        NotASubgroup: If H is not closed
    """
    _require_subgroup(G, H)
    return G.subset(G.table[h][g] for h in H.members)


def subgroup_index(G: FiniteGroup, H: ElementSet) -> int:
    """The index |G:H|.

    Raises:
        NotASubgroup: If H is not closed
    """
    _require_subgroup(G, H)
    return G.order // len(H)


def is_abelian(G: FiniteGroup) -> bool:
    t = G.table
    return all(t[i][j] == t[j][i] for i in range(G.order) for j in range(i))


def is_elementary_abelian_2(G: FiniteGroup) -> bool:
    """Whether every element squares to the identity (so G is Z2^k)."""
    return all(o <= 2 for o in G.element_orders)


def squares(G: FiniteGroup) -> ElementSet:
    """The set {g^2 : g in G}."""
    return G.subset(G.table[i][i] for i in range(G.order))


def center(G: FiniteGroup) -> ElementSet:
    t = G.table
    return G.subset(
        z for z in range(G.order) if all(t[z][g] == t[g][z] for g in range(G.order))
    )


def order_histogram(G: FiniteGroup) -> dict[int, int]:
    """Number of elements of each order, keyed by ascending order."""
    return dict(sorted(Counter(G.element_orders).items()))


def invariant_vector(G: FiniteGroup) -> tuple:
    """Isomorphism invariants: order, histogram, abelian flag, center size."""
    return (
        G.order,
        tuple(order_histogram(G).items()),
        is_abelian(G),
        len(center(G)),
    )


def minimal_generating_set(G: FiniteGroup) -> tuple[int, ...]:
    """Greedy generating set.

    Repeatedly adds an element outside the current closure, preferring the
    largest element order and then the least index.
    """
    gens: list[int] = []
    closure = ElementSet.of(G.order, [0])
    orders = G.element_orders
    while len(closure) < G.order:
        candidates = [g for g in range(G.order) if g not in closure]
        pick = max(candidates, key=lambda g: (orders[g], -g))
        gens.append(pick)
        closure = generated_subgroup(G, G.subset(gens))
    return tuple(gens)
