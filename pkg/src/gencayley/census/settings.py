"""Run configuration for censuses."""

from __future__ import annotations

from pydantic import Field, field_validator

from gencayley._base import GCModel
from gencayley.catalog.catalog import CATALOG_ORDERS, CatalogKind
from gencayley.errors import UnsupportedOrder

MAX_CENSUS_ORDER = 30


class CensusSettings(GCModel):
    """Options for run_census and cayley_sum_census.

    Attributes:
        orders: Catalog orders to sweep, each at most 30
        kind: "abelian", "nonabelian" or "all"
        subset_size: Size k of the connection sets
        conjugacy_reduction: Use one involution per Aut(G)-conjugacy class
        include_identity: Also use alpha = id (ordinary Cayley graphs)
        workers: Process count; 1 runs in-process
        require_generating: Cayley sum census only keeps S with <S> = G
    """

    orders: tuple[int, ...] = CATALOG_ORDERS
    kind: CatalogKind = "abelian"
    subset_size: int = Field(default=3, ge=1)
    conjugacy_reduction: bool = True
    include_identity: bool = False
    workers: int = Field(default=1, ge=1)
    require_generating: bool = True

    @field_validator("orders")
    @classmethod
    def _check_orders(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        for n in value:
            if n > MAX_CENSUS_ORDER or n not in CATALOG_ORDERS:
                raise UnsupportedOrder(
                    f"Census order {n} is not one of {list(CATALOG_ORDERS)}"
                )
        return tuple(sorted(set(value)))
