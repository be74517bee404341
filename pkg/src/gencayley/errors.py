"""Exception hierarchy for gencayley.

All errors derive from `GencayleyError`, itself a `ValueError`, so that a
violation raised inside a pydantic validator surfaces as a
`pydantic.ValidationError` carrying the same message, while the public
`validate_*` helpers raise the typed error directly.
"""

from __future__ import annotations

from typing import Any


class GencayleyError(ValueError):
    """Base error with an optional list of detail strings."""

    def __init__(self, message: str, errors: list[str] | None = None):
        """Initialize the error with a message and optional details.

        Args:
            message: The main error message
            errors: Optional list of detailed messages
        """
        super().__init__(message)
        self.errors = errors or []


class _WitnessError(GencayleyError):
    """Error that names the first violating element, pair or triple."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


# Group tables


class NotLatinSquare(_WitnessError):
    """A row or column of a multiplication table repeats an entry."""


class NoIdentity(_WitnessError):
    """Index 0 does not act as a two-sided identity."""


class NoInverse(_WitnessError):
    """Some element has no two-sided inverse."""


class NotAssociative(_WitnessError):
    """A triple (i, j, k) with (gi gj) gk != gi (gj gk)."""


class NotASubgroup(_WitnessError):
    """A set that was required to be a subgroup is not closed."""


class NotAbelian(_WitnessError):
    """An operation defined for abelian groups got a non-abelian one."""


class NotAHomomorphism(_WitnessError):
    """An image array does not define a bijective homomorphism."""


class NotInvolutory(_WitnessError):
    """An automorphism that must square to the identity does not."""


class UnknownElement(_WitnessError):
    """An element reference does not resolve inside the group."""


# Size guards


class OrderLimitExceeded(GencayleyError):
    """A group is too large for the requested search."""


class UnsupportedOrder(GencayleyError):
    """A family or catalog was asked for an order outside its bounds."""


class SizeLimitExceeded(GencayleyError):
    """A graph is too large for the requested exact computation."""


# Subsets and graphs


class MeetsOmega(_WitnessError):
    """A subset contains an element of the form alpha(g^-1) g."""


class NotAlphaSymmetric(_WitnessError):
    """A subset element s with alpha(s^-1) outside the subset."""


class NotSymmetricSet(_WitnessError):
    """A Cayley connection set is not closed under inversion."""


class NotSquareFree(_WitnessError):
    """A Cayley sum connection set contains a square."""


class InternalAsymmetry(_WitnessError):
    """A built adjacency relation is not symmetric."""


class EmptySubset(GencayleyError):
    """An operation requiring a non-empty subset got an empty one."""


class NotConnected(GencayleyError):
    """An operation requiring a connected graph got a disconnected one."""


class CriteriaDisagreement(_WitnessError):
    """Two decision procedures that must agree returned different verdicts."""


# Parsing and reports


class ParseError(GencayleyError):
    """Malformed group expression or element specification.

    Attributes:
        offset: Byte offset into the input where parsing stopped
        expected: Sorted tokens that would have been accepted there
    """

    def __init__(self, message: str, offset: int, expected: list[str] | None = None):
        """Initialize with the failing offset and the expected-token set."""
        self.offset = offset
        self.expected = sorted(expected or [])
        detail = f" (expected one of: {', '.join(self.expected)})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class MismatchAgainstGolden(GencayleyError):
    """Rendered output differs from a stored golden file."""

    def __init__(self, message: str, diff: list[str]):
        """Initialize with the unified diff lines."""
        super().__init__(message, errors=diff)
        self.diff = diff


class UnknownFixture(GencayleyError):
    """A fixture id that is not in the registry."""
