"""Alpha-partitions and generalized Cayley subsets."""

from gencayley.gcs.partition import (
    AlphaPartition,
    alpha_partition,
    check_involution,
    omega_element,
)
from gencayley.gcs.subsets import (
    GCSubset,
    SubsetFacts,
    check_gcs,
    conjugate_gcs,
    enumerate_gcs,
    product_subset,
    stabilizer_set,
    validate_gcs,
)

__all__ = [
    "AlphaPartition",
    "GCSubset",
    "SubsetFacts",
    "alpha_partition",
    "check_gcs",
    "check_involution",
    "conjugate_gcs",
    "enumerate_gcs",
    "omega_element",
    "product_subset",
    "stabilizer_set",
    "validate_gcs",
]
