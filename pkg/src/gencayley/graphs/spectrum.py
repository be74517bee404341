"""Exact characteristic polynomials and the integral-spectrum decision.

Only integer arithmetic is used: the characteristic polynomial comes from
sympy's DomainMatrix over ZZ, and integrality is decided by deflating
integer roots one at a time.
"""

from __future__ import annotations

import logging

from pydantic import field_validator, model_validator
from sympy import Poly, symbols
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from gencayley._base import GCModel
from gencayley.errors import SizeLimitExceeded
from gencayley.graphs.graph import SimpleGraph

logger = logging.getLogger(__name__)

MAX_SPECTRUM_VERTICES = 64

_x = symbols("x")


class IntegerPoly(GCModel):
    """Monic integer polynomial, coefficients from the leading term down."""

    coefficients: tuple[int, ...]

    @field_validator("coefficients")
    @classmethod
    def _check_monic(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value or value[0] != 1:
            raise ValueError("Polynomial must be monic")
        return value

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k: int) -> int:
        result = 0
        for c in self.coefficients:
            result = result * k + c
        return result

    def __str__(self) -> str:
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coefficients):
            if c == 0:
                continue
            mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            if mono and abs(c) == 1:
                coeff = "-" if c < 0 else ""
            else:
                coeff = str(c)
            terms.append(f"{coeff}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_sympy(self) -> Poly:
        return Poly(list(self.coefficients), _x, domain=ZZ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> IntegerPoly:
        return cls(coefficients=tuple(int(c) for c in poly.all_coeffs()))

    @classmethod
    def from_roots(cls, roots: list[int] | tuple[int, ...]) -> IntegerPoly:
        coeffs = [1]
        for r in roots:
            shifted = coeffs + [0]
            for i, c in enumerate(coeffs):
                shifted[i + 1] -= r * c
            coeffs = shifted
        return cls(coefficients=tuple(coeffs))


class SpectrumVerdict(GCModel):
    """Whether every eigenvalue is an integer.

    Attributes:
        integral: True when the polynomial splits into integer linear factors
        char_poly: The characteristic polynomial that was deflated
        roots: Eigenvalues with multiplicity, descending (integral only)
        remainder: The factor left without integer roots (non-integral only)
    """

    integral: bool
    char_poly: IntegerPoly
    roots: tuple[int, ...] = ()
    remainder: IntegerPoly | None = None

    @model_validator(mode="after")
    def _check_factorization(self) -> SpectrumVerdict:
        if self.integral:
            if self.remainder is not None:
                raise ValueError("An integral spectrum leaves no remainder")
            if IntegerPoly.from_roots(self.roots) != self.char_poly:
                raise ValueError("Roots do not multiply back to the characteristic polynomial")
        else:
            if self.remainder is None or self.remainder.degree < 2:
                raise ValueError("A non-integral spectrum leaves a remainder of degree >= 2")
            if self.roots:
                raise ValueError("Roots are only listed for an integral spectrum")
        return self

    def __bool__(self) -> bool:
        return self.integral


def _check_size(X: SimpleGraph) -> None:
    if X.n > MAX_SPECTRUM_VERTICES:
        raise SizeLimitExceeded(
            f"Spectra are limited to {MAX_SPECTRUM_VERTICES} vertices, got {X.n}"
        )


def char_poly(X: SimpleGraph) -> IntegerPoly:
    """det(xI - A) over the integers.

    Raises:
        SizeLimitExceeded: If X has more than 64 vertices
    """
    _check_size(X)
    rows = [[ZZ(a) for a in row] for row in X.adjacency]
    matrix = DomainMatrix(rows, (X.n, X.n), ZZ)
    return IntegerPoly(coefficients=tuple(int(c) for c in matrix.charpoly()))


def _divisors(m: int) -> list[int]:
    m = abs(m)
    return [d for d in range(1, m + 1) if m % d == 0]


def _candidates(X: SimpleGraph, poly: IntegerPoly) -> list[int]:
    d = X.regular_degree()
    if d is not None:
        return list(range(d, -d - 1, -1))
    bound = X.max_degree()
    trailing = next((c for c in reversed(poly.coefficients) if c != 0), 1)
    cands = {0}
    for q in _divisors(trailing):
        if q <= bound:
            cands.update((q, -q))
    return sorted(cands, reverse=True)


def integral_spectrum(X: SimpleGraph) -> SpectrumVerdict:
    """Decide integrality of the adjacency spectrum by exact deflation.

    Candidate roots are [-d, d] for a d-regular graph, otherwise zero and
    the divisors of the trailing nonzero coefficient bounded by the
    maximum degree.

    Raises:
        SizeLimitExceeded: If X has more than 64 vertices
    """
    poly = char_poly(X)
    current = poly.to_sympy()
    roots: list[int] = []
    for k in _candidates(X, poly):
        linear = Poly([1, -k], _x, domain=ZZ)
        while current.degree() > 0 and current.eval(k) == 0:
            current = current.quo(linear)
            roots.append(k)
    if current.degree() == 0:
        verdict = SpectrumVerdict(integral=True, char_poly=poly, roots=tuple(roots))
    else:
        verdict = SpectrumVerdict(
            integral=False,
            char_poly=poly,
            remainder=IntegerPoly.from_sympy(current),
        )
    logger.debug("Spectrum of %r: integral=%s roots=%s", X, verdict.integral, verdict.roots)
    return verdict
