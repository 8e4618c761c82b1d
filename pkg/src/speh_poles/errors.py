"""Exception hierarchy shared by every module of the package."""


class SpehPolesError(Exception):
    """Base class for all errors raised by :mod:`speh_poles`."""


class DomainError(SpehPolesError, ValueError):
    """An argument lies outside the admissible range of an operation."""


class EnumerationLimitError(SpehPolesError):
    """The requested shuffle enumeration exceeds the configured cap."""

    def __init__(self, m, n, cap):
        self.m, self.n, self.cap = m, n, cap
        super().__init__(
            f"enumeration of shuffles for m={m}, n={n} exceeds the cap m+n <= {cap}"
        )


class ConsistencyError(SpehPolesError):
    """An internal cross-check failed; this signals a modeling bug."""


class IndeterminateOrderError(SpehPolesError):
    """The order of an expansion at t=0 could not be determined."""

    def __init__(self, message, window=None):
        self.window = window
        super().__init__(message)


class PoleProximityError(SpehPolesError, ValueError):
    """A numeric evaluation was requested too close to a pole of L."""


class TheoremViolation(SpehPolesError):
    """The verification pipeline found an orbit contradicting the pole bound."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = [
            f"sigma={v['sigma']} orbit={v['basePoint']}: {v['reason']}"
            for v in self.violations
        ]
        super().__init__("theorem violation:\n" + "\n".join(lines))
