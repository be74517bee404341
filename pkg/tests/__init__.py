"""gencayley test suite.

- groups/: Multiplication tables, element sets and automorphisms
- catalog/: Group families, expressions and the order catalogs
- parsers/: Group expression and element/automorphism parsing
- gcs/: Alpha-partitions and generalized Cayley subsets
- graphs/: Constructions, structure checks, spectra, isomorphism, export
- criteria/: Algebraic connectivity and bipartiteness against the graphs
- census/: Censuses, reports, fixtures and the D8 involution table
- cli/: Command line round trips
"""
