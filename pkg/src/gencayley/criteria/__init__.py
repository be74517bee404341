"""Algebraic decision procedures for connectivity and bipartiteness.

Each function works from subgroups and products in G alone; the graph is
only built where a condition names the graph itself.
"""

from gencayley.criteria.bipartite import (
    bipartite_algebraic,
    bipartite_when_connected,
    check_bipartite_witness,
)
from gencayley.criteria.connectivity import (
    connected_algebraic,
    connected_coset_criterion,
    identity_component_algebraic,
    left_product_subgroup,
    right_product_subgroup,
    theta_class,
    verify_alpha_bridge,
)
from gencayley.criteria.verdicts import (
    BipartiteEquivalence,
    BipartiteVerdict,
    ConnectivityBranch,
    ConnectivityVerdict,
)

__all__ = [
    "BipartiteEquivalence",
    "BipartiteVerdict",
    "ConnectivityBranch",
    "ConnectivityVerdict",
    "bipartite_algebraic",
    "bipartite_when_connected",
    "check_bipartite_witness",
    "connected_algebraic",
    "connected_coset_criterion",
    "identity_component_algebraic",
    "left_product_subgroup",
    "right_product_subgroup",
    "theta_class",
    "verify_alpha_bridge",
]
