"""Exception types shared across the library."""


class SplitkitError(Exception):
    """Base class for all splitkit errors."""


class SequenceValidationError(SplitkitError, ValueError):
    """A degree entry violates the simple loopless bounds.

    The offending position is available as ``index``.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NegativeDegreeError(SequenceValidationError):
    """A degree entry is negative."""


class OutOfRangeError(SequenceValidationError):
    """A degree entry exceeds N - 1 and cannot occur in a simple (di)graph."""


class EmptySequenceError(SplitkitError, ValueError):
    """The operation needs at least one entry."""


class NotGraphicError(SplitkitError, ValueError):
    """No simple undirected graph realizes the sequence."""


class NotDigraphicError(SplitkitError, ValueError):
    """No simple loopless digraph realizes the pair sequence."""


class UnbalancedSequenceError(SplitkitError, ValueError):
    """Total out-degree and total in-degree differ, so the two defining
    forms of the partition measure disagree (by exactly that difference)."""


class BudgetExceededError(SplitkitError, RuntimeError):
    """A brute-force enumeration would exceed the configured budget."""
