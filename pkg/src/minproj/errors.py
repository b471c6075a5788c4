"""Exception hierarchy shared across the package.

Every error that callers are expected to catch has its own class; the CLI
maps them onto its exit-code contract (2 for bad input, 3 for exhausted
enumeration budgets).
"""


class MinprojError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(MinprojError):
    """Malformed input data (bad rational string, float literal, missing field)."""


class NotSymmetricError(MinprojError):
    """Vertex set is not closed under negation."""


class NotFullDimensionalError(MinprojError):
    """Vertex set does not span the ambient space."""


class NotExtremeError(MinprojError):
    """A listed vertex is a convex combination of the others (or a duplicate)."""


class NotMinimalError(MinprojError):
    """An operator claimed to be a minimal projection exceeds the projection constant."""


class CertificateInvalidError(MinprojError):
    """An optimality certificate failed one of its exact defining identities."""


class SubsetBudgetExceededError(MinprojError):
    """General-position enumeration exceeded the configured subset cap."""


class SupportBudgetExceededError(MinprojError):
    """Minimal-support search exceeded the configured candidate cap."""


class RankGapViolationError(MinprojError):
    """The rank-drop law for certificates with constant > 1 failed (implementation bug)."""
