"""Exception types shared across the package."""

from __future__ import annotations


class DessinError(Exception):
    """Base class for all errors raised by frobdessin."""


class InvalidParameters(DessinError, ValueError):
    """Projective-space or field parameters outside the supported domain."""


class FieldTooLarge(InvalidParameters):
    """The requested field would exceed the configured table size."""


class NotADifferenceSet(DessinError, ValueError):
    """Raised when the difference tally of a residue set is not uniform.

    ``alpha`` is the first nonzero residue whose count deviates, ``count`` its
    tally and ``expected`` the uniform value ``k(k-1)/(v-1)`` (``None`` when
    that quotient is not an integer).
    """

    def __init__(self, alpha: int, count: int, expected: int | None):
        self.alpha = alpha
        self.count = count
        self.expected = expected
        super().__init__(
            f"difference {alpha} occurs {count} times, expected {expected}"
        )


class NotFrobeniusFixed(DessinError, ValueError):
    """A residue set is not closed under multiplication by the multiplier."""

    def __init__(self, element: int, image: int, multiplier: int, modulus: int):
        self.element = element
        self.image = image
        self.multiplier = multiplier
        self.modulus = modulus
        super().__init__(
            f"{multiplier}*{element} = {image} mod {modulus} is not in the set"
        )


class FNotDividingQ(DessinError, ValueError):
    """Block orderings need the group order to divide the set size."""


class OrbitShapeError(DessinError, ValueError):
    """Orbits of the multiplier do not all have the required length."""


class BudgetExhausted(DessinError):
    """A search ran out of nodes before reaching a verdict.

    This is never a proof that no solution exists.
    """

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget of {nodes} nodes exhausted")


class SizeGuardError(DessinError):
    """The object is larger than the configured guard allows."""


class NotAnAutomorphism(DessinError):
    """A vertex map expected to be an automorphism is not one."""
