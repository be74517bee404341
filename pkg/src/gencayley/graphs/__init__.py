"""Graph constructions, structure checks, spectra, isomorphism and export."""

from gencayley.graphs.export import (
    export_graph,
    graph_to_dict,
    graph_to_dot,
    graph_to_graphml,
    graph_to_json,
    save_graph,
)
from gencayley.graphs.graph import (
    SimpleGraph,
    build_cayley_graph,
    build_cayley_sum_graph,
    build_gc_graph,
    complete_graph,
    direct_product_graph,
    two_walk_graph,
)
from gencayley.graphs.isomorphism import MAX_ISOMORPHISM_VERTICES, are_isomorphic
from gencayley.graphs.spectrum import (
    MAX_SPECTRUM_VERTICES,
    IntegerPoly,
    SpectrumVerdict,
    char_poly,
    integral_spectrum,
)
from gencayley.graphs.structure import (
    BipartiteCheck,
    component_of,
    connected_components,
    is_bipartite,
    is_connected,
)

__all__ = [
    "MAX_ISOMORPHISM_VERTICES",
    "MAX_SPECTRUM_VERTICES",
    "BipartiteCheck",
    "IntegerPoly",
    "SimpleGraph",
    "SpectrumVerdict",
    "are_isomorphic",
    "build_cayley_graph",
    "build_cayley_sum_graph",
    "build_gc_graph",
    "char_poly",
    "complete_graph",
    "component_of",
    "connected_components",
    "direct_product_graph",
    "export_graph",
    "graph_to_dict",
    "graph_to_dot",
    "graph_to_graphml",
    "graph_to_json",
    "integral_spectrum",
    "is_bipartite",
    "is_connected",
    "save_graph",
    "two_walk_graph",
]
