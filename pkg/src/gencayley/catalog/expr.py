"""Group expression syntax tree.

Nodes are frozen pydantic models discriminated by `kind`. Dihedral and
dicyclic nodes carry the group ORDER (D8 is the symmetry group of the
square), matching how the families are written throughout the package.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import Field, field_validator

from gencayley._base import GCModel


class Cyclic(GCModel):
    kind: Literal["cyclic"] = "cyclic"
    n: int = Field(ge=1)


class ElemAbelian2(GCModel):
    """Z2^k."""

    kind: Literal["elem_abelian_2"] = "elem_abelian_2"
    k: int = Field(ge=1)


class Dihedral(GCModel):
    """Dihedral group of the given order."""

    kind: Literal["dihedral"] = "dihedral"
    order: int

    @field_validator("order")
    @classmethod
    def _even_order(cls, v: int) -> int:
        if v < 4 or v % 2:
            raise ValueError(f"Dihedral order must be even and at least 4, got {v}")
        return v


class Dicyclic(GCModel):
    """Dicyclic group of the given order (T8 is Q8)."""

    kind: Literal["dicyclic"] = "dicyclic"
    order: int

    @field_validator("order")
    @classmethod
    def _order_multiple_of_four(cls, v: int) -> int:
        if v < 8 or v % 4:
            raise ValueError(
                f"Dicyclic order must be a multiple of 4 and at least 8, got {v}"
            )
        return v


class Quaternion(GCModel):
    kind: Literal["quaternion"] = "quaternion"


class Sym(GCModel):
    kind: Literal["sym"] = "sym"
    n: int = Field(ge=1)


class Alt(GCModel):
    kind: Literal["alt"] = "alt"
    n: int = Field(ge=1)


class SL23(GCModel):
    kind: Literal["sl23"] = "sl23"


class F54(GCModel):
    kind: Literal["f54"] = "f54"


class U24(GCModel):
    kind: Literal["u24"] = "u24"


class V24(GCModel):
    kind: Literal["v24"] = "v24"


class U30(GCModel):
    kind: Literal["u30"] = "u30"


class Product(GCModel):
    kind: Literal["product"] = "product"
    left: GroupExpr
    right: GroupExpr


class Power(GCModel):
    kind: Literal["power"] = "power"
    base: GroupExpr
    k: int = Field(ge=1)


GroupExpr = Annotated[
    Union[
        Cyclic,
        ElemAbelian2,
        Dihedral,
        Dicyclic,
        Quaternion,
        Sym,
        Alt,
        SL23,
        F54,
        U24,
        V24,
        U30,
        Product,
        Power,
    ],
    Field(discriminator="kind"),
]

Product.model_rebuild()
Power.model_rebuild()

_FIXED_NAMES = {
    "quaternion": "Q8",
    "sl23": "SL23",
    "f54": "F54",
    "u24": "U24",
    "v24": "V24",
    "u30": "U30",
}


def format_group_expr(expr: GroupExpr) -> str:
    """Canonical text of an expression; parsing it gives the expression back."""
    if isinstance(expr, Product):
        right = format_group_expr(expr.right)
        if isinstance(expr.right, Product):
            right = f"({right})"
        return f"{format_group_expr(expr.left)} x {right}"
    if isinstance(expr, Power):
        base = format_group_expr(expr.base)
        if isinstance(expr.base, (Product, Power, ElemAbelian2)):
            base = f"({base})"
        return f"{base}^{expr.k}"
    if isinstance(expr, Cyclic):
        return f"Z{expr.n}"
    if isinstance(expr, ElemAbelian2):
        return f"Z2^{expr.k}"
    if isinstance(expr, Dihedral):
        return f"D{expr.order}"
    if isinstance(expr, Dicyclic):
        return f"T{expr.order}"
    if isinstance(expr, Sym):
        return f"S{expr.n}"
    if isinstance(expr, Alt):
        return f"A{expr.n}"
    return _FIXED_NAMES[expr.kind]
