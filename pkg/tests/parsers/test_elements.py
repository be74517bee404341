"""Tests for element references, subsets and automorphism specifications."""

from __future__ import annotations

import pytest

from gencayley.catalog import build_group
from gencayley.errors import NotAHomomorphism, ParseError, UnknownElement
from gencayley.groups import FiniteGroup
from gencayley.parsers import (
    parse_alpha,
    parse_subset,
    resolve_element,
    split_top_level,
    split_top_level_spans,
)


class TestSplitTopLevel:
    def test_respects_nesting(self):
        assert split_top_level("(1,0), (0,1)") == ["(1,0)", "(0,1)"]
        assert split_top_level("[[0,1],[2,0]], e") == ["[[0,1],[2,0]]", "e"]

    def test_single_piece(self):
        assert split_top_level("  a  ") == ["a"]

    def test_spans_point_into_raw_text(self):
        assert split_top_level_spans("  a->b,   (1,0) ") == [("a->b", 2), ("(1,0)", 10)]


class TestResolveElement:
    """Test the three resolution stages."""

    def test_canonical_name(self, d8: FiniteGroup):
        assert resolve_element(d8, "a^2 b") == 6
        assert resolve_element(d8, " e ") == 0

    def test_word_over_generators(self, d8: FiniteGroup):
        assert resolve_element(d8, "a^-1 b") == d8.index_of("a^3 b")
        assert resolve_element(d8, "b a") == d8.index_of("a^3 b")
        assert resolve_element(d8, "a*a*a*a") == 0

    def test_cyclic_words(self, z14: FiniteGroup):
        assert resolve_element(z14, "3") == 3
        assert resolve_element(z14, "g^3") == 3
        assert resolve_element(z14, "g^-1") == 13

    def test_tuple_syntax(self):
        G = build_group("D6 x Z2")
        assert resolve_element(G, "(a^-1,1)") == G.index_of("(a^2,1)")
        assert resolve_element(G, "(b a, 0)") == G.index_of("(a^2 b,0)")

    def test_tuple_arity_mismatch(self):
        G = build_group("D6 x Z2")
        with pytest.raises(UnknownElement) as exc_info:
            resolve_element(G, "(a,1,0)")
        assert "3 components" in str(exc_info.value)

    def test_cycles(self):
        S4 = build_group("S4")
        assert resolve_element(S4, "(12)(34)") == S4.index_of("(1 2)(3 4)")
        assert resolve_element(S4, "(3 1)") == S4.index_of("(1 3)")
        assert resolve_element(S4, "(1 2)(1 3)") == S4.index_of("(1 2 3)")

    def test_matrix_generators(self):
        G = build_group("SL23")
        assert resolve_element(G, "A") == G.index_of("[[0,1],[2,0]]")
        assert resolve_element(G, "A^2") == G.index_of("[[2,0],[0,2]]")

    @pytest.mark.parametrize("text", ["", "c", "a^", "a^x"])
    def test_unknown(self, d8: FiniteGroup, text):
        with pytest.raises(UnknownElement):
            resolve_element(d8, text)


class TestParseSubset:
    def test_braces_optional(self, d8: FiniteGroup):
        expected = d8.named_subset(["b", "a b"])
        assert parse_subset(d8, "{b, a b}") == expected
        assert parse_subset(d8, "b, a b") == expected

    def test_empty(self, d8: FiniteGroup):
        assert parse_subset(d8, "{}").is_empty
        assert parse_subset(d8, "  ").is_empty

    def test_words(self, z14: FiniteGroup):
        assert parse_subset(z14, "g, g^3, g^5").members == (1, 3, 5)

    def test_product_elements(self):
        G = build_group("Z2^2 x Z6")
        S = parse_subset(G, "(1,0,0), (0,0,2), (0,0,4)")
        assert S.members == (2, 4, 12)

    def test_repeated_element(self, d8: FiniteGroup):
        with pytest.raises(ParseError) as exc_info:
            parse_subset(d8, " { b, a^-1 b,  a^3 b }")
        assert exc_info.value.offset == 15
        assert "'a^3 b' repeats 'a^-1 b'" in str(exc_info.value)


class TestParseAlpha:
    """Test automorphism specifications."""

    def test_generator_images(self, d8: FiniteGroup):
        alpha = parse_alpha(d8, "a->a^-1, b->b")
        assert alpha(d8.index_of("a")) == d8.index_of("a^3")
        assert alpha(d8.index_of("a b")) == d8.index_of("a^3 b")

    def test_alternative_arrows(self, d8: FiniteGroup):
        assert parse_alpha(d8, "a↦a^3, b=>b") == parse_alpha(d8, "a->a^3, b->b")

    def test_keywords(self, d8: FiniteGroup):
        assert parse_alpha(d8, "id").is_identity
        assert parse_alpha(build_group("Z6"), "inverse").image == (0, 5, 4, 3, 2, 1)
        conj = parse_alpha(d8, "inner a")
        assert conj(d8.index_of("b")) == d8.index_of("a^2 b")
        assert parse_alpha(d8, "conj a") == conj

    def test_cyclic_power_map(self):
        Z8 = build_group("Z8")
        assert parse_alpha(Z8, "g->g^3").image == (0, 3, 6, 1, 4, 7, 2, 5)

    def test_missing_arrow(self, d8: FiniteGroup):
        with pytest.raises(ParseError) as exc_info:
            parse_alpha(d8, "a a^-1")
        assert exc_info.value.offset == 0
        assert exc_info.value.expected == ["->", "=>", "↦"]

    @pytest.mark.parametrize(
        "text,offset",
        [("  a->a^-1,   b", 13), ("a↦a^-1, b", 10), ("a->a^3,\tb->b,b", 13)],
    )
    def test_offset_counts_raw_bytes(self, d8: FiniteGroup, text, offset):
        with pytest.raises(ParseError) as exc_info:
            parse_alpha(d8, text)
        assert exc_info.value.offset == offset

    def test_source_mapped_twice(self, d8: FiniteGroup):
        with pytest.raises(ParseError) as exc_info:
            parse_alpha(d8, "a->a^3, a->a")
        assert exc_info.value.offset == 8
        assert "mapped twice" in str(exc_info.value)

    def test_repeated_consistent_pair(self, d8: FiniteGroup):
        assert parse_alpha(d8, "a->a^3, b->b, a->a^3") == parse_alpha(d8, "a->a^3, b->b")

    def test_not_an_automorphism(self, d8: FiniteGroup):
        with pytest.raises(NotAHomomorphism):
            parse_alpha(d8, "a->b, b->a")

    def test_sources_must_generate(self, d8: FiniteGroup):
        with pytest.raises(NotAHomomorphism):
            parse_alpha(d8, "a->a^3")

    def test_inverse_of_non_abelian(self, d8: FiniteGroup):
        with pytest.raises(NotAHomomorphism):
            parse_alpha(d8, "inverse")
