"""Text front ends: group expressions, element words and automorphism specs.

Parsing functions:
- parse_group_expr: "Z2^2 x Z6" -> GroupExpr
- resolve_element: "a^-1 b" -> element index
- parse_subset: "g, g^3, g^5" -> ElementSet
- parse_alpha: "a->a^-1, b->b" -> GroupMap

Serialization of graphs and reports lives next to the models it writes
(`gencayley.graphs.export`, `gencayley.census.report`).
"""

from gencayley.parsers.elements import (
    parse_alpha,
    parse_subset,
    resolve_element,
    split_top_level,
    split_top_level_spans,
)
from gencayley.parsers.group_expr import parse_group_expr

__all__ = [
    "parse_alpha",
    "parse_group_expr",
    "parse_subset",
    "resolve_element",
    "split_top_level",
    "split_top_level_spans",
]
