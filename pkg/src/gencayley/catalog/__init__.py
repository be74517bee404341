"""Group families, group expressions and order-indexed catalogs.

    >>> from gencayley.catalog import build_group, catalog_of_order
    >>> build_group("Z2^2 x Z6").order
    24
    >>> [name for name, _ in catalog_of_order(6)]
    ['Z6', 'D6']
"""

from gencayley.catalog.build import build, build_group, expected_order
from gencayley.catalog.catalog import (
    CATALOG_ORDERS,
    CatalogKind,
    abelian_names,
    catalog_names,
    catalog_of_order,
    isomorphic_pairs,
)
from gencayley.catalog.expr import GroupExpr, format_group_expr

__all__ = [
    "CATALOG_ORDERS",
    "CatalogKind",
    "GroupExpr",
    "abelian_names",
    "build",
    "build_group",
    "catalog_names",
    "catalog_of_order",
    "expected_order",
    "format_group_expr",
    "isomorphic_pairs",
]
