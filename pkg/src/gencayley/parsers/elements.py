"""Element references, subsets and automorphism specifications.

An element reference is resolved in this order:

1. the canonical element name, ignoring whitespace ("a^2 b", "(1,0,2)");
2. tuple syntax over the direct-product factors ("(a^-1,0)");
3. a word over the named generators ("a^-1b", "g^3", "B^2 A"), where
   "e" is the identity and, in permutation groups, cycles such as
   "(243)" or "(1 2)(3 4)" multiply left to right.

Automorphisms are written as comma-separated "x->y" pairs whose sources
generate the group ("a->a^-1, b->a b"), or as "inner g" for conjugation
x -> g x g^-1. "id" and "inverse" name the identity and inversion maps.
"""

from __future__ import annotations

from typing import Iterator

from gencayley.errors import ParseError, UnknownElement
from gencayley.groups.automorphisms import (
    GroupMap,
    extend_to_automorphism,
    identity_map,
    inner_automorphism,
    inverse_map,
)
from gencayley.groups.group import ElementSet, FiniteGroup

_OPEN = "([{"
_CLOSE = ")]}"
_ARROWS = ("->", "↦", "=>")


def split_top_level_spans(text: str, sep: str = ",") -> list[tuple[str, int]]:
    """Stripped pieces between top-level `sep`, each with the index of its first character."""
    bounds, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        elif ch == sep and depth == 0:
            bounds.append((start, i))
            start = i + 1
    bounds.append((start, len(text)))
    spans = []
    for lo, hi in bounds:
        raw = text[lo:hi]
        spans.append((raw.strip(), lo + len(raw) - len(raw.lstrip())))
    return spans


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on `sep` outside any (), [] or {} nesting; pieces are stripped."""
    return [piece for piece, _ in split_top_level_spans(text, sep)]


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def resolve_element(G: FiniteGroup, text: str) -> int:
    """Index of the element `text` refers to.

    Raises:
        UnknownElement: If the reference does not resolve in G
    """
    ref = text.strip()
    if not ref:
        raise UnknownElement("Empty element reference", witness=text)
    try:
        return G.index_of(ref)
    except UnknownElement:
        pass
    if G.factors and ref.startswith("(") and ref.endswith(")"):
        parts = split_top_level(ref[1:-1])
        if len(parts) == len(G.factors):
            coords = [resolve_element(f, p) for f, p in zip(G.factors, parts)]
            return G.from_coordinates(coords)
        raise UnknownElement(
            f"'{ref}' has {len(parts)} components, {G} has {len(G.factors)} factors",
            witness=text,
        )
    x = 0
    for atom in _word_atoms(G, ref):
        x = G.table[x][atom]
    return x


def _word_atoms(G: FiniteGroup, word: str) -> Iterator[int]:
    gens = sorted(G.generators, key=lambda pair: -len(pair[0]))
    gen_names = {name for name, _ in gens}
    pos, n = 0, len(word)
    while pos < n:
        ch = word[pos]
        if ch.isspace() or ch in "*·":
            pos += 1
            continue
        if ch == "(" and not G.factors:
            end = word.find(")", pos)
            if end < 0:
                raise UnknownElement(f"Unclosed cycle in '{word}'", witness=word)
            base = _cycle_element(G, word[pos + 1 : end], word)
            pos = end + 1
        elif ch == "e" and "e" not in gen_names:
            base = 0
            pos += 1
        else:
            for name, index in gens:
                if word.startswith(name, pos):
                    base = index
                    pos += len(name)
                    break
            else:
                raise UnknownElement(
                    f"Cannot read '{word[pos:]}' as an element of {G}", witness=word
                )
        exponent = 1
        if pos < n and word[pos] == "^":
            pos += 1
            start = pos
            if pos < n and word[pos] in "+-":
                pos += 1
            while pos < n and word[pos].isdigit():
                pos += 1
            try:
                exponent = int(word[start:pos])
            except ValueError:
                raise UnknownElement(
                    f"Missing exponent after '^' in '{word}'", witness=word
                ) from None
        yield G.power(base, exponent)


def _cycle_element(G: FiniteGroup, body: str, word: str) -> int:
    body = body.strip()
    points = body.split() if " " in body else list(body)
    if not points or not all(p.isdigit() for p in points):
        raise UnknownElement(f"Malformed cycle '({body})' in '{word}'", witness=word)
    if len(points) == 1:
        return 0
    values = [int(p) for p in points]
    least = values.index(min(values))
    rotated = values[least:] + values[:least]
    return G.index_of("(" + " ".join(str(v) for v in rotated) + ")")


def parse_subset(G: FiniteGroup, spec: str) -> ElementSet:
    """Parse "x, y, z" (optionally braced) into an ElementSet.

    Raises:
        ParseError: If two references name the same element
        UnknownElement: If a reference does not resolve
    """
    body, base = spec, 0
    stripped = spec.strip()
    if stripped.startswith("{") and stripped.endswith("}"):
        base = spec.index("{") + 1
        body = spec[base : spec.rindex("}")]
    if not body.strip():
        return G.subset([])
    seen: dict[int, str] = {}
    for piece, index in split_top_level_spans(body):
        x = resolve_element(G, piece)
        if x in seen:
            raise ParseError(
                f"'{piece}' repeats '{seen[x]}' ({G.names[x]})",
                _byte_offset(spec, base + index),
            )
        seen[x] = piece
    return G.subset(seen)


def parse_alpha(G: FiniteGroup, spec: str) -> GroupMap:
    """Parse an automorphism specification.

    Raises:
        ParseError: If a pair lacks an arrow or a source is mapped twice
        UnknownElement: If an element reference does not resolve
        NotAHomomorphism: If the images do not extend to an automorphism
    """
    text = spec.strip()
    lowered = text.lower()
    if lowered in ("id", "identity"):
        return identity_map(G)
    if lowered in ("inverse", "iota"):
        return inverse_map(G)
    for prefix in ("inner ", "conj "):
        if lowered.startswith(prefix):
            return inner_automorphism(G, resolve_element(G, text[len(prefix) :]))

    images: dict[int, int] = {}
    for piece, index in split_top_level_spans(spec):
        offset = _byte_offset(spec, index)
        arrow = next((a for a in _ARROWS if a in piece), None)
        if arrow is None:
            raise ParseError(f"Missing arrow in '{piece}'", offset, list(_ARROWS))
        source_text, _, target_text = piece.partition(arrow)
        source = resolve_element(G, source_text)
        target = resolve_element(G, target_text)
        if images.get(source, target) != target:
            raise ParseError(
                f"'{source_text.strip()}' is mapped twice", offset, [","]
            )
        images[source] = target
    return extend_to_automorphism(G, images)
