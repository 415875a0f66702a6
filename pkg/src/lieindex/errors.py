from __future__ import annotations


class LieIndexError(Exception):
    """Base class for every error raised by the package."""


class RaggedRows(LieIndexError, ValueError):
    pass


class AmbientMismatch(LieIndexError, ValueError):
    pass


class FieldMismatch(LieIndexError, ValueError):
    pass


class Unsupported(LieIndexError):
    """The request is well-formed but not decidable by the available procedures."""


class StrictCoreUnsupported(Unsupported):
    pass


class BoundExceeded(LieIndexError):
    pass


class IndexOutOfRange(LieIndexError, ValueError):
    pass


class DuplicatePair(LieIndexError, ValueError):
    pass


class JacobiViolation(LieIndexError, ValueError):
    def __init__(self, i: int, j: int, k: int, names=None):
        self.triple = (i, j, k)
        if names is None:
            names = [f"e{t + 1}" for t in range(max(i, j, k) + 1)]
        self.names = (names[i], names[j], names[k])
        super().__init__(
            "Jacobi identity fails on basis triple (%s, %s, %s)" % self.names
        )


class NotAnIdeal(LieIndexError, ValueError):
    pass


class NotASubalgebra(LieIndexError, ValueError):
    pass


class WrongDimension(LieIndexError, ValueError):
    pass


class UnknownName(LieIndexError, KeyError):
    pass


class GiveUp(LieIndexError):
    pass


class InternalInconsistency(LieIndexError, AssertionError):
    """Two independent routes to the same quantity disagreed."""
