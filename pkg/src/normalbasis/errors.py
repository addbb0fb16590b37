"""Exception hierarchy.

``DomainError`` and ``HypothesisError`` mean the caller asked for something
outside the range where a construction or criterion applies. ``VerificationError``
means exact arithmetic contradicted a claim that should hold; it is never raised
for bad input.
"""


class DomainError(ValueError):
    """Parameter outside the domain of a construction (e.g. a degenerate level)."""


class LevelMismatchError(ValueError):
    """Two cyclotomic elements at different levels were combined."""


class HypothesisError(ValueError):
    """A precondition of a criterion does not hold for the given input."""


class EnumerationBoundError(ValueError):
    """A group is too large for exhaustive subgroup or character enumeration."""


class IndeterminateError(ValueError):
    """A q-series is zero up to its truncation, so its order is unknown."""


class VerificationError(RuntimeError):
    """Exact computation disagreed with an expected mathematical fact."""
