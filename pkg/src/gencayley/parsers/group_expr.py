"""Recursive-descent parser for group expressions.

Grammar (whitespace-insensitive, products left-associative)::

    expr := term ('x' term)*
    term := atom ('^' INT)?
    atom := 'Z' INT | 'D' INT | 'T' INT | 'Q8' | 'S' INT | 'A' INT
          | 'SL23' | 'F54' | 'U24' | 'V24' | 'U30' | '(' expr ')'

`D n` and `T n` take the group order. `Z2^k` parses to the elementary
abelian node. The product sign may also be written as `*` or the
multiplication sign.
"""

from __future__ import annotations

from pydantic import ValidationError

from gencayley.catalog.expr import (
    F54,
    SL23,
    U24,
    U30,
    V24,
    Alt,
    Cyclic,
    Dicyclic,
    Dihedral,
    ElemAbelian2,
    GroupExpr,
    Power,
    Product,
    Quaternion,
    Sym,
)
from gencayley.errors import ParseError

_KEYWORDS = {
    "SL23": SL23,
    "Q8": Quaternion,
    "F54": F54,
    "U24": U24,
    "V24": V24,
    "U30": U30,
}
_INDEXED = {
    "Z": lambda v: Cyclic(n=v),
    "D": lambda v: Dihedral(order=v),
    "T": lambda v: Dicyclic(order=v),
    "S": lambda v: Sym(n=v),
    "A": lambda v: Alt(n=v),
}
_PRODUCT_SIGNS = ("x", "*", "×")
_ATOM_START = sorted(set(_INDEXED) | set(_KEYWORDS) | {"("})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def error(self, message: str, expected: list[str]) -> ParseError:
        return ParseError(message, self.offset(), expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected an integer", ["INT"])
        return int(self.text[start : self.pos])

    def parse(self) -> GroupExpr:
        if not self.text.strip():
            raise self.error("Empty group expression", _ATOM_START)
        expr = self.expr()
        if self.peek():
            raise self.error(
                f"Unexpected '{self.peek()}'", ["x", "^", "end of input"]
            )
        return expr

    def expr(self) -> GroupExpr:
        left = self.term()
        while self.peek() in _PRODUCT_SIGNS:
            self.pos += 1
            left = Product(left=left, right=self.term())
        return left

    def term(self) -> GroupExpr:
        start = self.pos
        base = self.atom()
        if self.peek() != "^":
            return base
        self.pos += 1
        k = self.integer()
        try:
            if isinstance(base, Cyclic) and base.n == 2:
                return ElemAbelian2(k=k)
            return Power(base=base, k=k)
        except ValidationError as exc:
            self.pos = start
            raise self.error(_first_message(exc), ["INT"]) from None

    def atom(self) -> GroupExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                raise self.error("Unclosed parenthesis", [")"])
            self.pos += 1
            return inner
        for keyword, node in _KEYWORDS.items():
            if self.text.startswith(keyword, self.pos):
                self.pos += len(keyword)
                return node()
        if ch in _INDEXED:
            start = self.pos
            self.pos += 1
            value = self.integer()
            try:
                return _INDEXED[ch](value)
            except ValidationError as exc:
                self.pos = start
                raise self.error(_first_message(exc), ["INT"]) from None
        raise self.error(
            f"Unexpected '{ch}'" if ch else "Unexpected end of input", _ATOM_START
        )


def _first_message(exc: ValidationError) -> str:
    return exc.errors()[0]["msg"]


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group expression such as "Z2^2 x Z6" or "D8 x Z3".

    Raises:
        ParseError: With the byte offset and the set of accepted tokens
    """
    return _Parser(text).parse()
