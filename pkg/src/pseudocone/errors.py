"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PseudoconeError(Exception):
    """Base class for every error raised by this package."""


class DimensionTooLarge(PseudoconeError):
    """A desk-scale cap was exceeded.

    ``cap`` names the limit (e.g. ``"cap-ray-n"``) so partial reports can
    record which field it blocked.
    """

    def __init__(self, cap: str, value: int, limit: int) -> None:
        super().__init__(f"{cap}: {value} exceeds limit {limit}")
        self.cap = cap
        self.value = value
        self.limit = limit


class LengthMismatch(PseudoconeError, ValueError):
    pass


class IndexOutOfRange(PseudoconeError, IndexError):
    pass


class ZeroMatrix(PseudoconeError, ValueError):
    pass


class ZeroVector(PseudoconeError, ValueError):
    pass


class ZeroRow(PseudoconeError, ValueError):
    pass


class NegativeCoordinate(PseudoconeError, ValueError):
    pass


class DegenerateConeNotPointed(PseudoconeError):
    pass


class GirthTooSmall(PseudoconeError, ValueError):
    pass


class InvalidGamma(PseudoconeError, ValueError):
    pass


class InvalidR(PseudoconeError, ValueError):
    pass


class NotADivisor(PseudoconeError, ValueError):
    pass


class NonPositiveSigma(PseudoconeError, ValueError):
    pass


class RowWeightTooLarge(PseudoconeError):
    def __init__(self, weight: int, limit: int) -> None:
        super().__init__(f"row weight {weight} exceeds limit {limit}")
        self.weight = weight
        self.limit = limit


class Unbounded(PseudoconeError):
    """LP has no finite optimum; impossible over a polytope."""


class InconsistentInputs(PseudoconeError, ValueError):
    pass


class InconsistentAdjacency(PseudoconeError, ValueError):
    pass


class ParseError(PseudoconeError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class TheoremFalsified(PseudoconeError, AssertionError):
    """A bound or tightness theorem failed on a concrete ray.

    Carries the offending ray so the failure can be reproduced.
    """

    def __init__(self, message: str, ray=None) -> None:
        super().__init__(message)
        self.ray = ray
