"""Error types shared across the package.

Every error carries an ``exit_code`` so the CLI can map failures uniformly:
1 = malformed input, 2 = invariant/domain violation, 3 = cross-route or
theorem-verification failure.
"""

from __future__ import annotations


class SpherebifError(Exception):
    exit_code = 2


class MalformedInput(SpherebifError):
    """Input record is structurally unusable (missing field, wrong arity, wrong type)."""

    exit_code = 1


class InvariantViolation(SpherebifError):
    """A stated invariant of a domain value is violated."""


class DomainError(InvariantViolation):
    """Argument outside an operation's domain (e.g. rotation number j > m)."""


class NegativeMultiplicity(InvariantViolation):
    """Pointwise difference of decompositions would go negative."""


class NotInvertible(InvariantViolation):
    """Ring element has SO(2)-coordinate other than +-1."""


class LevelNotInLambda(InvariantViolation):
    """Requested level is not a candidate bifurcation level for this system."""


class MissingDirection(LevelNotInLambda):
    """Level +beta_m with n_- = 0, or -beta_m with n_+ = 0.

    For representable levels this coincides with the level lying outside the
    candidate set, hence the subclassing.
    """


class TruncationTooSmall(InvariantViolation):
    """Finite-dimensional reduction index must exceed the level's harmonic index."""


class RouteMismatch(SpherebifError):
    """Independent computation routes disagree; carries every route's value."""

    exit_code = 3

    def __init__(self, message: str, values: dict | None = None):
        super().__init__(message)
        self.values = dict(values or {})


class AssertionFailure(SpherebifError):
    """A mechanically checked theorem failed; names the rule and the counterexample."""

    exit_code = 3

    def __init__(self, rule: str, detail: str, counterexample=None):
        super().__init__(f"{rule}: {detail}")
        self.rule = rule
        self.counterexample = counterexample
