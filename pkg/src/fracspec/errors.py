"""Exception taxonomy shared by all fracspec modules.

Two families matter to callers (and to the CLI exit-code contract):
validation errors (bad inputs, out-of-regime parameters, poles) and
numerical-integrity errors (a computation produced a value the library
refuses to trust). Validation maps to exit code 2, integrity to 3.
"""

from __future__ import annotations


class FracspecError(Exception):
    """Base class for all library errors."""


class DomainError(FracspecError, ValueError):
    """Input outside an operation's mathematical domain (non-finite,
    negative where positivity is required, malformed file, ...)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of the Gamma function."""


class RegimeError(DomainError):
    """Parameters violate the admissible regime of a formula
    (e.g. a Gamma argument with nonpositive real part, k != 1 where
    the Morse-count reduction requires it)."""


class EndpointDegenerateError(DomainError):
    """A spectral path has a track sitting on the Jacobi threshold at
    t = 0 or t = 1, so index jumps are not well defined."""


class ConvergenceError(FracspecError, RuntimeError):
    """An iterative scheme cannot reach the requested tolerance within
    its iteration cap."""


class NumericalIntegrityError(FracspecError, RuntimeError):
    """A quantity that must be real/positive/bracketed came out
    otherwise; the library raises instead of silently truncating."""
