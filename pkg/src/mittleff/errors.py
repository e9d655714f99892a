"""Exception types shared across the package.

Every refusal the library makes goes through one of these three, so callers
can distinguish "you asked for something outside the supported domain"
(DomainError) from "the request was legal but the numerics could not deliver
the promised accuracy" (ConvergenceError).
"""


class DomainError(ValueError):
    """Parameters outside the supported domain of an operation."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to reach the requested accuracy.

    Raised instead of returning a value whose error estimate exceeds the
    contract.  The message records how far the computation got.
    """


class EnvelopeError(DomainError):
    """Arguments fall outside the accuracy envelope of an evaluator.

    Subclass of DomainError: the input is refused up front, before any
    summation is attempted.
    """
