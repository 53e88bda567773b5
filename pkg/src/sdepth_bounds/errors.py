"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A construction or bound was called outside its admissible parameter range."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds the configured poset size cap."""


class SearchTimeout(RuntimeError):
    """A partition search ran out of its time budget.

    ``feasible_k`` is the largest target verified feasible so far (or None) and
    ``unknown_k`` is the first target whose status could not be settled.
    """

    def __init__(self, message, feasible_k=None, unknown_k=None):
        super().__init__(message)
        self.feasible_k = feasible_k
        self.unknown_k = unknown_k


class InvariantViolation(AssertionError):
    """An internal mathematical identity or sign condition failed."""


class UnsupportedComparison(TypeError):
    """Two surds with different radicands were compared with the strict comparator."""
