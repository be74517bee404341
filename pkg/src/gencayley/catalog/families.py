"""Constructors for the concrete group families.

Presentation families are realized on normal forms a^i b^j (index
j*m + i, so the powers of a come first) with a product rule derived from
the relators. Every constructor checks that the generators close up to
the expected order and that the defining relators hold, so a transcription
error in a presentation fails loudly instead of producing a wrong group.
"""

from __future__ import annotations

import logging
from itertools import permutations, product
from math import factorial
from typing import Callable, Sequence

from gencayley.errors import GencayleyError, UnsupportedOrder
from gencayley.groups.group import (
    MAX_GROUP_ORDER,
    FiniteGroup,
    direct_product,
    generated_subgroup,
)

logger = logging.getLogger(__name__)

Word = Sequence[tuple[str, int]]
ProductRule = Callable[[int, int, int, int], tuple[int, int]]


def _require_order(order: int, family: str) -> None:
    if order > MAX_GROUP_ORDER:
        raise UnsupportedOrder(
            f"{family} of order {order} exceeds the supported maximum {MAX_GROUP_ORDER}"
        )


def _ab_name(i: int, j: int, a: str = "a", b: str = "b") -> str:
    parts = []
    if i:
        parts.append(a if i == 1 else f"{a}^{i}")
    if j:
        parts.append(b if j == 1 else f"{b}^{j}")
    return " ".join(parts) or "e"


def _evaluate(G: FiniteGroup, word: Word) -> int:
    gens = dict(G.generators)
    x = 0
    for name, k in word:
        x = G.table[x][G.power(gens[name], k)]
    return x


def _presentation_group(
    m: int,
    k: int,
    rule: ProductRule,
    relators: Sequence[tuple[Word, Word]],
    family: str,
) -> FiniteGroup:
    """Group on normal forms a^i b^j, 0 <= i < m, 0 <= j < k."""
    n = m * k
    _require_order(n, family)
    table = []
    for j1 in range(k):
        for i1 in range(m):
            row = []
            for j2 in range(k):
                for i2 in range(m):
                    i, j = rule(i1, j1, i2, j2)
                    row.append(j * m + i)
            table.append(tuple(row))
    names = tuple(_ab_name(i, j) for j in range(k) for i in range(m))
    generators = (("a", 1),) + ((("b", m),) if k > 1 else ())
    try:
        G = FiniteGroup(
            order=n, table=tuple(table), names=names, label=family, generators=generators
        )
    except ValueError as exc:
        raise GencayleyError(f"Normal-form rules for {family} are inconsistent: {exc}") from exc
    _check_presentation(G, relators, n, family)
    return G


def _check_presentation(
    G: FiniteGroup, relators: Sequence[tuple[Word, Word]], expected: int, family: str
) -> None:
    closure = generated_subgroup(G, G.subset(i for _, i in G.generators))
    if len(closure) != expected:
        raise GencayleyError(
            f"Generators of {family} close up to {len(closure)} elements, expected {expected}"
        )
    for lhs, rhs in relators:
        if _evaluate(G, lhs) != _evaluate(G, rhs):
            raise GencayleyError(f"Relator {lhs} = {rhs} fails in {family}")


def _a_normal(m: int, k: int, s: int, t: int) -> ProductRule:
    """<a> normal, b a b^-1 = a^s, b^k = a^t."""

    def rule(i1: int, j1: int, i2: int, j2: int) -> tuple[int, int]:
        i = i1 + i2 * pow(s, j1, m)
        j = j1 + j2
        if j >= k:
            j -= k
            i += t
        return i % m, j

    return rule


def _b_normal(m: int, k: int, r: int) -> ProductRule:
    """<b> normal, a^-1 b a = b^r."""

    def rule(i1: int, j1: int, i2: int, j2: int) -> tuple[int, int]:
        return (i1 + i2) % m, (j1 * pow(r, i2, k) + j2) % k

    return rule


def cyclic(n: int) -> FiniteGroup:
    """Z_n written additively: elements "0" .. "n-1", generator g = 1."""
    _require_order(n, f"Z{n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    generators = (("g", 1),) if n > 1 else ()
    return FiniteGroup(
        order=n,
        table=table,
        names=tuple(str(i) for i in range(n)),
        label=f"Z{n}",
        generators=generators,
    )


def power(G: FiniteGroup, k: int) -> FiniteGroup:
    """The k-fold direct product G x ... x G."""
    _require_order(G.order**k, f"{G}^{k}")
    result = G
    for _ in range(k - 1):
        result = direct_product(result, G)
    return result


def elementary_abelian_2(k: int) -> FiniteGroup:
    return power(cyclic(2), k)


def dihedral(order: int) -> FiniteGroup:
    """D_order = <a, b | a^n = b^2 = e, bab = a^-1>, n = order/2."""
    m = order // 2
    return _presentation_group(
        m,
        2,
        _a_normal(m, 2, -1, 0),
        [
            ([("a", m)], []),
            ([("b", 2)], []),
            ([("b", 1), ("a", 1), ("b", 1)], [("a", -1)]),
        ],
        f"D{order}",
    )


def dicyclic(order: int) -> FiniteGroup:
    """T_order = <a, b | a^2n = b^4 = e, a^n = b^2, b^-1 a b = a^-1>, n = order/4."""
    n = order // 4
    m = 2 * n
    return _presentation_group(
        m,
        2,
        _a_normal(m, 2, -1, n),
        [
            ([("a", m)], []),
            ([("b", 4)], []),
            ([("a", n)], [("b", 2)]),
            ([("b", -1), ("a", 1), ("b", 1)], [("a", -1)]),
        ],
        f"T{order}",
    )


def quaternion() -> FiniteGroup:
    """Q8 = <a, b | a^4 = e, a^2 = b^2, b^-1 a b = a^-1>."""
    G = dicyclic(8)
    return G.model_copy(update={"label": "Q8"})


def f54() -> FiniteGroup:
    """F_{5,4} = <a, b | a^5 = b^4 = e, b^-1 a b = a^2>.

    Conjugation by b sends a to a^3 (the inverse of 2 mod 5).
    """
    return _presentation_group(
        5,
        4,
        _a_normal(5, 4, 3, 0),
        [
            ([("a", 5)], []),
            ([("b", 4)], []),
            ([("b", -1), ("a", 1), ("b", 1)], [("a", 2)]),
        ],
        "F54",
    )


def _u_group(m: int, label: str) -> FiniteGroup:
    """<a, b | a^m = b^3 = e, a^-1 b a = b^-1>."""
    return _presentation_group(
        m,
        3,
        _b_normal(m, 3, -1),
        [
            ([("a", m)], []),
            ([("b", 3)], []),
            ([("a", -1), ("b", 1), ("a", 1)], [("b", -1)]),
        ],
        label,
    )


def u24() -> FiniteGroup:
    return _u_group(8, "U24")


def u30() -> FiniteGroup:
    return _u_group(10, "U30")


def _v24_rule(i1: int, j1: int, i2: int, j2: int) -> tuple[int, int]:
    # b^2 is central and b a^i = a^-i b^((-1)^i), so for odd j1
    # b^j1 a^i2 = a^-i2 b^(j1 - 2) when i2 is odd and a^-i2 b^j1 otherwise.
    if j1 % 2:
        i = i1 - i2
        j = j1 + j2 - 2 * (i2 % 2)
    else:
        i = i1 + i2
        j = j1 + j2
    return i % 6, j % 4


def v24() -> FiniteGroup:
    """V24 = <a, b | a^6 = b^4 = e, ba = a^-1 b^-1, b^-1 a = a^-1 b>."""
    return _presentation_group(
        6,
        4,
        _v24_rule,
        [
            ([("a", 6)], []),
            ([("b", 4)], []),
            ([("b", 1), ("a", 1)], [("a", -1), ("b", -1)]),
            ([("b", -1), ("a", 1)], [("a", -1), ("b", 1)]),
        ],
        "V24",
    )


Matrix = tuple[tuple[int, int], tuple[int, int]]


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return (
        (
            (x[0][0] * y[0][0] + x[0][1] * y[1][0]) % 3,
            (x[0][0] * y[0][1] + x[0][1] * y[1][1]) % 3,
        ),
        (
            (x[1][0] * y[0][0] + x[1][1] * y[1][0]) % 3,
            (x[1][0] * y[0][1] + x[1][1] * y[1][1]) % 3,
        ),
    )


def _mat_name(x: Matrix) -> str:
    return f"[[{x[0][0]},{x[0][1]}],[{x[1][0]},{x[1][1]}]]"


def sl23() -> FiniteGroup:
    """SL(2,3): 2x2 matrices over the field with 3 elements, determinant 1.

    Generators A = [[0,1],[2,0]] and B = [[1,1],[0,1]].
    """
    identity: Matrix = ((1, 0), (0, 1))
    mats = sorted(
        ((a, b), (c, d))
        for a, b, c, d in product(range(3), repeat=4)
        if (a * d - b * c) % 3 == 1
    )
    mats.remove(identity)
    elements = [identity] + mats
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[_mat_mul(x, y)] for y in elements) for x in elements)
    A: Matrix = ((0, 1), (2, 0))
    B: Matrix = ((1, 1), (0, 1))
    G = FiniteGroup(
        order=len(elements),
        table=table,
        names=tuple(_mat_name(x) for x in elements),
        label="SL23",
        generators=(("A", index[A]), ("B", index[B])),
    )
    _check_presentation(G, [([("A", 4)], []), ([("B", 3)], [])], 24, "SL23")
    return G


def cycle_name(perm: Sequence[int]) -> str:
    """Cycle notation of a 0-based permutation with 1-based points.

    Cycles start at their least point and fixed points are omitted; the
    identity is "e".
    """
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, x = [], start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "e"


def _is_even(perm: Sequence[int]) -> bool:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return inversions % 2 == 0


def _permutation_group(n: int, even_only: bool, label: str) -> FiniteGroup:
    size = factorial(n) // (2 if even_only and n > 1 else 1)
    _require_order(size, label)
    perms = [p for p in permutations(range(n)) if not even_only or _is_even(p)]
    index = {p: i for i, p in enumerate(perms)}
    # Left-to-right composition: x^(gh) = (x^g)^h.
    table = tuple(
        tuple(index[tuple(h[g[x]] for x in range(n))] for h in perms) for g in perms
    )
    return FiniteGroup(
        order=len(perms),
        table=table,
        names=tuple(cycle_name(p) for p in perms),
        label=label,
    )


def symmetric(n: int) -> FiniteGroup:
    """Sym(n) on points 1..n, elements in lexicographic order of images."""
    return _permutation_group(n, even_only=False, label=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    return _permutation_group(n, even_only=True, label=f"A{n}")
