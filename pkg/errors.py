"""
Exception hierarchy for murank.

Every failure raised by the library derives from MuRankError so callers
(the CLI in particular) can map them to exit codes in one place.
"""


class MuRankError(Exception):
    """Base error for all murank failures."""


# field-core

class NonPrimeError(MuRankError):
    """The characteristic handed to a field constructor is not prime."""


class UnsupportedSizeError(MuRankError):
    """Field size or algebra dimension is outside the supported range."""


class DimensionMismatchError(MuRankError):
    """An element vector does not have the algebra's dimension."""


class DuplicatePointError(MuRankError):
    """Two interpolation abscissae coincide."""


class CountMismatchError(MuRankError):
    """Number of interpolation conditions does not match the target degree."""


# bilinear-algebra

class RangeError(MuRankError):
    """A parameter is outside the range an operation is defined on."""


class BudgetExceededError(MuRankError):
    """Exhaustive search would exceed the configured enumeration budget."""


# constants-registry

class MissingTableEntryError(MuRankError):
    """The known-values table has no entry for a required quantity."""


class TableFormatError(MuRankError):
    """The known-values file is malformed or inconsistent."""


# tower-models

class InvalidStepError(MuRankError):
    """A tower step (k, s) is outside the tower's index set."""


class BelowThresholdError(MuRankError):
    """n is below the validity threshold of a tower family."""


class StepNotFoundError(MuRankError):
    """No suitable step was found within the configured level cap."""


# bound-engine / asymptotics

class DivisorConditionViolatedError(MuRankError):
    """A proper divisor of d is too large for the explicit bound."""


class OutOfDomainError(MuRankError):
    """n lies outside the domain of the piecewise bound on a step."""


class NotASquareError(MuRankError):
    """q^t is not a perfect square (or is below 9)."""
