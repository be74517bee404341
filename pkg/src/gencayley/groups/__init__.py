"""Finite groups, element sets and automorphisms.

Group tables:
- FiniteGroup, ElementSet, validate_group, direct_product

Subgroups and set arithmetic:
- generated_subgroup, set_product, set_inverse, right_coset, subgroup_index

Automorphisms:
- GroupMap, automorphism_group, involutory_automorphisms,
  involution_conjugacy_classes, extend_to_automorphism, inner_automorphism
"""

from gencayley.groups.automorphisms import (
    GroupMap,
    automorphism_group,
    check_automorphism,
    extend_to_automorphism,
    find_isomorphism,
    identity_map,
    inner_automorphism,
    inverse_map,
    involution_conjugacy_classes,
    involutory_automorphisms,
    product_map,
)
from gencayley.groups.group import (
    MAX_GROUP_ORDER,
    ElementSet,
    FiniteGroup,
    center,
    check_group_table,
    direct_product,
    generated_subgroup,
    invariant_vector,
    is_abelian,
    is_elementary_abelian_2,
    is_subgroup,
    minimal_generating_set,
    order_histogram,
    right_coset,
    set_inverse,
    set_product,
    squares,
    subgroup_index,
    validate_group,
)

__all__ = [
    "MAX_GROUP_ORDER",
    "ElementSet",
    "FiniteGroup",
    "GroupMap",
    "automorphism_group",
    "center",
    "check_automorphism",
    "check_group_table",
    "direct_product",
    "extend_to_automorphism",
    "find_isomorphism",
    "generated_subgroup",
    "identity_map",
    "inner_automorphism",
    "invariant_vector",
    "inverse_map",
    "involution_conjugacy_classes",
    "involutory_automorphisms",
    "is_abelian",
    "is_elementary_abelian_2",
    "is_subgroup",
    "minimal_generating_set",
    "order_histogram",
    "product_map",
    "right_coset",
    "set_inverse",
    "set_product",
    "squares",
    "subgroup_index",
    "validate_group",
]
