"""The comparison function F and the bifurcation constants c_n.

The threshold inequality Xi < ((n+2g)/(n-2g)) Theta_{0,0} collapses,
after cancelling Gamma factors, to F(n/2 - g) < F(n/2 + g) with

    F(x) = Gamma(x/2 + 1) Gamma(x/2 - 1/2) / Gamma(x/2 - 1/4)^2

on (1, +inf). F blows up like sqrt(pi)/(Gamma(1/4)^2 (x-1)) at the
left end, grows like x/2 at infinity, and has a single interior
minimum x_0 ~ 1.514. For n >= 4 the half-dimension n/2 exceeds x_0,
so G(c) = log F(n/2 + c) - log F(n/2 - c) starts positive and falls
to -inf as c approaches n/2 - 1; its unique zero is c_n.

All work happens in log F to keep large n overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NumericalIntegrityError
from .specfun import digamma_real, log_gamma_real

__all__ = ["F", "log_F", "dlog_F", "find_x0", "solve_cn", "cn_table", "CnRecord"]


def log_F(x: float) -> float:
    """log F(x) for x > 1."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if x <= 1.0:
        raise DomainError(f"F is defined on x > 1 (pole at x = 1), got {x:g}")
    h = x / 2.0
    return log_gamma_real(h + 1.0) + log_gamma_real(h - 0.5) - 2.0 * log_gamma_real(h - 0.25)


def F(x: float) -> float:
    """The Gamma ratio F(x); positive on (1, +inf)."""
    return math.exp(log_F(x))


def dlog_F(x: float) -> float:
    """d/dx log F(x), a digamma combination."""
    x = float(x)
    if x <= 1.0:
        raise DomainError(f"F is defined on x > 1, got {x:g}")
    h = x / 2.0
    return 0.5 * (digamma_real(h + 1.0) + digamma_real(h - 0.5) - 2.0 * digamma_real(h - 0.25))


def find_x0(tol: float = 1e-12) -> float:
    """The unique minimizer of F on (1, +inf), by bisecting the sign
    change of d/dx log F. Reproduces x_0 ~ 1.514."""
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    lo, hi = 1.2, 2.0
    f_lo, f_hi = dlog_F(lo), dlog_F(hi)
    # widen defensively; the sign change is known to sit in (1.2, 2)
    while f_lo > 0.0 and lo > 1.0 + 1e-9:
        lo = 1.0 + (lo - 1.0) / 2.0
        f_lo = dlog_F(lo)
    while f_hi < 0.0 and hi < 1e6:
        hi *= 2.0
        f_hi = dlog_F(hi)
    if not (f_lo < 0.0 < f_hi):
        raise NumericalIntegrityError("failed to bracket the minimizer of F")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if dlog_F(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class CnRecord:
    """One solved bifurcation constant: F(n/2 - c_n) = F(n/2 + c_n)."""

    n: int
    c_n: float
    residual: float
    bracket: tuple[float, float]

    def __post_init__(self) -> None:
        if not 0.0 < self.c_n < self.n / 2.0 - 1.0:
            raise NumericalIntegrityError(
                f"c_n must lie in (0, n/2 - 1), got {self.c_n!r} at n={self.n}"
            )

    @property
    def gap_to_asymptote(self) -> float:
        return self.n / 2.0 - 1.0 - self.c_n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "c_n": self.c_n,
            "residual": self.residual,
            "gap_to_asymptote": self.gap_to_asymptote,
        }


def solve_cn(n: int, tol: float = 1e-12) -> CnRecord:
    """The unique c in (0, n/2 - 1) with F(n/2 - c) = F(n/2 + c), n >= 4.

    G(c) = log F(n/2 + c) - log F(n/2 - c) is positive at c_min (since
    n/2 > x_0 puts F on its increasing branch) and tends to -inf as
    c -> (n/2 - 1)^- (F blows up at 1^+), so a sign change brackets the
    root away from the spurious zero at c = 0.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise DomainError(f"solve_cn requires integer n >= 4, got {n!r}")
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    half = n / 2.0
    c_max_open = half - 1.0

    def G(c: float) -> float:
        return log_F(half + c) - log_F(half - c)

    c_lo = min(0.05, c_max_open / 10.0)
    c_hi = c_max_open * (1.0 - 1e-9)
    g_lo, g_hi = G(c_lo), G(c_hi)
    if not (g_lo > 0.0 > g_hi):
        raise NumericalIntegrityError(
            f"bracketing failure for c_{n}: G({c_lo:g})={g_lo:g}, G({c_hi:g})={g_hi:g}"
        )
    bracket = (c_lo, c_hi)
    # bisect down to float representability: near the asymptote G is steep
    # (slope ~ 1/(n/2 - 1 - c)), so anything coarser leaves a residual the
    # record's invariant would reject; tol only caps the width from above
    for _ in range(200):
        mid = 0.5 * (c_lo + c_hi)
        if mid <= c_lo or mid >= c_hi:
            break
        g_mid = G(mid)
        if g_mid == 0.0:
            c_lo = c_hi = mid
            break
        if g_mid > 0.0:
            c_lo = mid
        else:
            c_hi = mid
    if (c_hi - c_lo) > tol * max(1.0, c_hi):
        raise NumericalIntegrityError(
            f"bisection stalled above the requested tolerance for c_{n}"
        )
    c = 0.5 * (c_lo + c_hi)
    f_plus = F(half + c)
    residual = abs(F(half - c) - f_plus)
    if residual > 1e-12 * f_plus:
        raise NumericalIntegrityError(
            f"c_{n} residual {residual:g} exceeds 1e-12 relative to F(n/2+c)={f_plus:g}"
        )
    return CnRecord(n=n, c_n=c, residual=residual, bracket=bracket)


def cn_table(n_min: int, n_max: int, tol: float = 1e-12) -> list[CnRecord]:
    """CnRecords for n in [n_min, n_max]; increasing, with the gap to
    the asymptote n/2 - 1 shrinking."""
    if not (isinstance(n_min, int) and isinstance(n_max, int)) or not 4 <= n_min <= n_max:
        raise DomainError(
            f"need integers 4 <= n_min <= n_max, got n_min={n_min!r}, n_max={n_max!r}"
        )
    records = [solve_cn(n, tol=tol) for n in range(n_min, n_max + 1)]
    for prev, cur in zip(records, records[1:]):
        if not cur.c_n > prev.c_n:
            raise NumericalIntegrityError(
                f"c_n failed to increase: c_{prev.n}={prev.c_n!r}, c_{cur.n}={cur.c_n!r}"
            )
        if not cur.gap_to_asymptote < prev.gap_to_asymptote:
            raise NumericalIntegrityError(
                f"asymptote gap failed to shrink between n={prev.n} and n={cur.n}"
            )
    return records
