"""Exception types shared across the package.

Each exception corresponds to one contract violation a caller can act on;
anything not listed here is a plain bug and surfaces as a built-in error.
"""
from __future__ import annotations


class ChiLieError(Exception):
    """Base class for all package-specific errors."""


class AmbientMismatch(ChiLieError):
    """Two subspaces or vectors live in different ambient dimensions."""


class DimensionMismatch(ChiLieError):
    """Vector or matrix shapes are incompatible for the requested operation."""


class InvalidAlgebra(ChiLieError):
    """A structure-constant table fails antisymmetry/Jacobi validation."""

    def __init__(self, message: str, triple=None, defect=None):
        super().__init__(message)
        self.triple = triple
        self.defect = defect


class IndexOutOfRange(ChiLieError, IndexError):
    """A generator index in an expression exceeds the available generators."""


class NotAnIdeal(ChiLieError):
    """Quotient requested by a subspace that is not bracket-stable."""


class NotGenerating(ChiLieError):
    """Given vectors fail to generate the domain as a Lie algebra."""


class NotWellDefined(ChiLieError):
    """Requested generator images are inconsistent with the relations."""


class BudgetExceeded(ChiLieError):
    """A free nilpotent algebra would exceed the configured basis budget."""


class NotNilpotent(ChiLieError):
    """Operation requires a nilpotent Lie algebra."""


class NotPerfect(ChiLieError):
    """Operation requires a perfect Lie algebra."""


class NonvanishingH2(ChiLieError):
    """Operation requires trivial second homology."""


class NotStabilized(ChiLieError):
    """Nilpotent quotients kept growing up to the allowed class."""

    def __init__(self, message: str, history=()):
        super().__init__(message)
        self.history = tuple(history)


class ConsistencyFailure(ChiLieError):
    """Two independent computations of the same invariant disagree."""


class UnknownName(ChiLieError):
    """Catalog lookup with a name that is not registered."""


class BadParams(ChiLieError):
    """Catalog constructor called with invalid parameters."""


class InputMismatch(ChiLieError):
    """Reports passed together were computed from different base algebras."""
