"""Typed failures shared across the package.

Evaluators never return wrong numbers on bad input: a vanishing (or
sub-margin) denominator, a non-convergent shell sum, a schema violation
and a failed convergence precondition each raise their own exception
type so callers can report them distinctly.
"""


class QRootsError(Exception):
    """Base class for all package-specific errors."""


class SingularParameter(QRootsError):
    """A denominator factor vanished or fell below the genericity margin.

    ``point`` carries the lattice point at which the factor was hit when
    the error occurred inside a series evaluation.
    """

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class UnsupportedMode(QRootsError):
    """Operation not available in the active arithmetic mode."""


class NoConvergence(QRootsError):
    """Bilateral shell contributions failed to decay within the radius cap."""

    def __init__(self, message, radius=None):
        super().__init__(message)
        self.radius = radius


class SchemaMismatch(QRootsError):
    """Parameter set does not fit the identity's schema."""


class ConvergenceConditionViolated(QRootsError):
    """The identity's convergence modulus exceeds the configured limit."""


class SamplingExhausted(QRootsError):
    """Random parameter search failed to find a generic point within budget."""
