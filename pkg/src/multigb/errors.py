"""Exception types shared across the package."""


class MultigbError(Exception):
    """Base class for all package errors."""


class RingMismatchError(MultigbError):
    """Operands belong to different rings or have the wrong shape."""


class ResourceLimitError(MultigbError):
    """A Groebner computation exceeded its configured resource guard."""


class NotSquarefreeError(MultigbError):
    """Operation requires a squarefree monomial ideal."""


class PolarizationCapacityError(MultigbError):
    """The ambient ring has too few variables to polarize in place."""


class HypothesisNotSatisfiedError(MultigbError):
    """The input does not satisfy the hypotheses of the requested check."""


class InconclusiveError(MultigbError):
    """Randomized evidence was contradictory; the caller should retry."""


class InternalConsistencyError(MultigbError):
    """Two criteria that must agree did not; signals an engine bug."""
