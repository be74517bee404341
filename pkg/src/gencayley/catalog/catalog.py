"""Order-indexed catalogs of groups.

Abelian groups of order n come from the partitions of the exponents in
the prime factorization of n, written by invariant factors. The
non-abelian lists are curated and cover every non-abelian group of the
supported orders.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Literal

from gencayley.catalog.build import build_group
from gencayley.errors import UnsupportedOrder
from gencayley.groups.automorphisms import find_isomorphism
from gencayley.groups.group import FiniteGroup, invariant_vector

logger = logging.getLogger(__name__)

CatalogKind = Literal["abelian", "nonabelian", "all"]

CATALOG_ORDERS = (4, 6, 8, 10, 12, 20, 24, 30)

_NONABELIAN: dict[int, tuple[str, ...]] = {
    4: (),
    6: ("D6",),
    8: ("D8", "Q8"),
    10: ("D10",),
    12: ("D12", "T12", "A4"),
    20: ("D20", "T20", "F54"),
    24: (
        "D12 x Z2",
        "T12 x Z2",
        "D6 x Z4",
        "A4 x Z2",
        "Q8 x Z3",
        "D24",
        "T24",
        "S4",
        "D8 x Z3",
        "U24",
        "V24",
        "SL23",
    ),
    30: ("D30", "U30", "D10 x Z3"),
}


def _factorize(n: int) -> list[tuple[int, int]]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def _partitions(e: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of e into non-increasing parts, the one-part partition first."""
    if e == 0:
        return [()]
    largest = e if largest is None else largest
    result = []
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            result.append((first,) + rest)
    return result


def abelian_names(n: int) -> list[str]:
    """Names of the abelian groups of order n, cyclic group first.

    Each name lists the invariant factors in ascending order with repeated
    factors written as powers: 8 gives ["Z8", "Z2 x Z4", "Z2^3"].
    """
    primes = _factorize(n)
    names = []
    for choice in product(*(_partitions(e) for _, e in primes)):
        length = max((len(parts) for parts in choice), default=0)
        factors = []
        for i in range(length):
            d = 1
            for (p, _), parts in zip(primes, choice):
                if i < len(parts):
                    d *= p ** parts[i]
            factors.append(d)
        names.append(_format_factors(sorted(factors)) if factors else "Z1")
    return names


def _format_factors(factors: list[int]) -> str:
    chunks = []
    i = 0
    while i < len(factors):
        d = factors[i]
        count = 1
        while i + count < len(factors) and factors[i + count] == d:
            count += 1
        chunks.append(f"Z{d}" if count == 1 else f"Z{d}^{count}")
        i += count
    return " x ".join(chunks)


def catalog_names(n: int, kind: CatalogKind = "all") -> list[str]:
    """Canonical names in the catalog of order n.

    Raises:
        UnsupportedOrder: If n is not a catalog order
    """
    if n not in _NONABELIAN:
        raise UnsupportedOrder(
            f"No catalog for order {n}; supported orders are {list(CATALOG_ORDERS)}"
        )
    names: list[str] = []
    if kind in ("abelian", "all"):
        names.extend(abelian_names(n))
    if kind in ("nonabelian", "all"):
        names.extend(_NONABELIAN[n])
    return names


def catalog_of_order(n: int, kind: CatalogKind = "all") -> list[tuple[str, FiniteGroup]]:
    """Isomorphism-class representatives of order n, as (name, group) pairs.

    Raises:
        UnsupportedOrder: If n is not in {4, 6, 8, 10, 12, 20, 24, 30}
    """
    entries = []
    for name in catalog_names(n, kind):
        group = build_group(name)
        entries.append((group.label, group))
    return entries


def isomorphic_pairs(entries: list[tuple[str, FiniteGroup]]) -> list[tuple[str, str]]:
    """Pairs of entries that are isomorphic.

    Entries are first bucketed by invariant vector; a full isomorphism
    search runs only inside a bucket.
    """
    buckets: dict[tuple, list[tuple[str, FiniteGroup]]] = {}
    for name, group in entries:
        buckets.setdefault(invariant_vector(group), []).append((name, group))
    pairs = []
    for bucket in buckets.values():
        for i, (name_a, a) in enumerate(bucket):
            for name_b, b in bucket[i + 1 :]:
                logger.debug("Invariant collision %s / %s, searching", name_a, name_b)
                if find_isomorphism(a, b) is not None:
                    pairs.append((name_a, name_b))
    return pairs
