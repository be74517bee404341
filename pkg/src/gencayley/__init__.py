"""gencayley - generalized Cayley graphs of small groups.

A generalized Cayley graph GC(G, S, alpha) has the elements of a finite
group G as vertices, with g adjacent to h when alpha(g^-1) h lies in S,
for an involutory automorphism alpha and a subset S avoiding
{alpha(g^-1) g} with alpha(S^-1) = S.

Core objects:
- FiniteGroup, GroupMap: Groups as Cayley tables and their automorphisms
- GCSubset: A validated connection set bound to (G, alpha)
- SimpleGraph: Adjacency matrix with the graph checks

Decision procedures:
- Use `gencayley.criteria` for the algebraic connectivity and
  bipartiteness criteria
- Use `gencayley.graphs` for search, spectra, isomorphism and export

Classification:
- Use `gencayley.census` for censuses, fixtures and the D8 table

Example:
    >>> from gencayley import build_group, parse_alpha, parse_subset, validate_gcs
    >>> from gencayley import build_gc_graph, is_connected, integral_spectrum
    >>>
    >>> G = build_group("D6")
    >>> alpha = parse_alpha(G, "a->a^-1, b->b")
    >>> S = validate_gcs(G, alpha, parse_subset(G, "b, a b, a^2 b"))
    >>> X = build_gc_graph(S)
    >>> is_connected(X), integral_spectrum(X).roots
    (True, (3, 0, 0, 0, 0, -3))
"""

from gencayley.catalog import build_group, catalog_of_order
from gencayley.census import CensusReport, CensusSettings, run_census
from gencayley.criteria import bipartite_algebraic, connected_algebraic
from gencayley.errors import GencayleyError
from gencayley.gcs import GCSubset, alpha_partition, enumerate_gcs, validate_gcs
from gencayley.graphs import (
    SimpleGraph,
    build_gc_graph,
    integral_spectrum,
    is_bipartite,
    is_connected,
)
from gencayley.groups import FiniteGroup, GroupMap, involutory_automorphisms
from gencayley.parsers import parse_alpha, parse_subset

__all__ = [
    "CensusReport",
    "CensusSettings",
    "FiniteGroup",
    "GCSubset",
    "GencayleyError",
    "GroupMap",
    "SimpleGraph",
    "alpha_partition",
    "bipartite_algebraic",
    "build_gc_graph",
    "build_group",
    "catalog_of_order",
    "connected_algebraic",
    "enumerate_gcs",
    "integral_spectrum",
    "involutory_automorphisms",
    "is_bipartite",
    "is_connected",
    "parse_alpha",
    "parse_subset",
    "run_census",
    "validate_gcs",
]
