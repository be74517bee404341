"""Lower group expressions to multiplication tables."""

from __future__ import annotations

from functools import lru_cache

from gencayley.catalog import families
from gencayley.catalog.expr import (
    F54,
    SL23,
    U24,
    U30,
    V24,
    Alt,
    Cyclic,
    Dicyclic,
    Dihedral,
    ElemAbelian2,
    GroupExpr,
    Power,
    Product,
    Quaternion,
    Sym,
    format_group_expr,
)
from gencayley.errors import UnsupportedOrder
from gencayley.groups.group import MAX_GROUP_ORDER, FiniteGroup, direct_product
from gencayley.parsers.group_expr import parse_group_expr


def expected_order(expr: GroupExpr) -> int:
    """Order of the group an expression denotes, without building it."""
    if isinstance(expr, Product):
        return expected_order(expr.left) * expected_order(expr.right)
    if isinstance(expr, Power):
        return expected_order(expr.base) ** expr.k
    if isinstance(expr, Cyclic):
        return expr.n
    if isinstance(expr, ElemAbelian2):
        return 2**expr.k
    if isinstance(expr, (Dihedral, Dicyclic)):
        return expr.order
    if isinstance(expr, (Sym, Alt)):
        size = 1
        for i in range(2, expr.n + 1):
            size *= i
            if size > MAX_GROUP_ORDER:
                break
        return size if isinstance(expr, Sym) or expr.n < 2 else size // 2
    if isinstance(expr, Quaternion):
        return 8
    if isinstance(expr, F54):
        return 20
    if isinstance(expr, (U24, V24, SL23)):
        return 24
    return 30


def _lower(expr: GroupExpr) -> FiniteGroup:
    if isinstance(expr, Product):
        return direct_product(build(expr.left), build(expr.right))
    if isinstance(expr, Power):
        return families.power(build(expr.base), expr.k)
    if isinstance(expr, Cyclic):
        return families.cyclic(expr.n)
    if isinstance(expr, ElemAbelian2):
        return families.elementary_abelian_2(expr.k)
    if isinstance(expr, Dihedral):
        return families.dihedral(expr.order)
    if isinstance(expr, Dicyclic):
        return families.dicyclic(expr.order)
    if isinstance(expr, Quaternion):
        return families.quaternion()
    if isinstance(expr, Sym):
        return families.symmetric(expr.n)
    if isinstance(expr, Alt):
        return families.alternating(expr.n)
    if isinstance(expr, SL23):
        return families.sl23()
    if isinstance(expr, F54):
        return families.f54()
    if isinstance(expr, U24):
        return families.u24()
    if isinstance(expr, V24):
        return families.v24()
    return families.u30()


@lru_cache(maxsize=256)
def build(expr: GroupExpr) -> FiniteGroup:
    """Build the group an expression denotes, labelled with its canonical text.

    Raises:
        UnsupportedOrder: If the group would have order above 64
    """
    order = expected_order(expr)
    if order > MAX_GROUP_ORDER:
        raise UnsupportedOrder(
            f"{format_group_expr(expr)} has order {order}, "
            f"the supported maximum is {MAX_GROUP_ORDER}"
        )
    group = _lower(expr)
    return group.model_copy(update={"label": format_group_expr(expr)})


def build_group(text: str) -> FiniteGroup:
    """Parse and build in one step: build_group("Z2^2 x Z6")."""
    return build(parse_group_expr(text))
