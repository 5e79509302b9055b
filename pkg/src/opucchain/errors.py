"""Exception hierarchy for the opucchain pipeline.

All exceptions derive from :class:`OpucChainError` so callers can catch the
whole family at once.  Numerical-criterion failures carry the measured value
so diagnostics do not require re-running the computation.
"""


class OpucChainError(Exception):
    """Base class for all opucchain errors."""


class ChainViolation(OpucChainError):
    """The forward parameter recursion left (0, 1) at index ``n``.

    Signals that the prefix d_1..d_n is not a positive chain sequence.
    """

    def __init__(self, n, value):
        self.n = n
        self.value = value
        super().__init__(f"chain parameter m_{n} = {value!r} is outside (0, 1)")


class NoConvergence(OpucChainError):
    """Depth ceiling reached before the requested tolerance was met."""

    def __init__(self, tol_achieved, depth_used):
        self.tol_achieved = tol_achieved
        self.depth_used = depth_used
        super().__init__(
            f"maximal-parameter estimate stalled at {tol_achieved:.3e} "
            f"with depth {depth_used}"
        )


class DomainError(OpucChainError):
    """Argument outside the mathematically valid domain."""


class DegreeTooLarge(OpucChainError):
    """Coefficient mode requested beyond the supported degree cap."""


class IdentityViolation(OpucChainError):
    """An algebraic identity failed beyond the allowed tolerance."""


class BracketFailure(OpucChainError):
    """A guaranteed sign change was not observed while locating zeros."""

    def __init__(self, level, bracket):
        self.level = level
        self.bracket = bracket
        super().__init__(f"no sign change at level {level}, bracket {bracket}")


class PositivityViolation(OpucChainError):
    """A quantity that must be strictly positive was not."""


class NormalizationViolation(OpucChainError):
    """Quadrature weights failed to sum to one within tolerance."""


class PrecisionLoss(OpucChainError):
    """Series-division residual exceeded the precision guard."""


class RelationViolation(OpucChainError):
    """Moment-functional relations failed beyond tolerance."""


class MonotonicityViolation(OpucChainError):
    """A provably monotone sequence was not monotone numerically."""


class RecursionViolation(OpucChainError):
    """A two-term recursion cross-check failed beyond tolerance."""


class MismatchError(OpucChainError):
    """Two independent computation routes disagreed beyond tolerance."""


class OrthogonalityViolation(OpucChainError):
    """Gram-matrix off-diagonal mass exceeded the orthogonality tolerance."""


class PoleError(OpucChainError):
    """A Pochhammer factor or series denominator vanished."""
