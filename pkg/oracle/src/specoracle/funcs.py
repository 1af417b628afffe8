"""High-precision reference implementations (mpmath throughout).

Every function here recomputes its quantity from the defining Gamma
ratio or from a deterministic bisection, independently of any
double-precision code path in the primary package.
"""

from __future__ import annotations

from mpmath import mp, mpc, mpf
import mpmath

from . import WORKING_DPS

mp.dps = WORKING_DPS

_QUARTER = mpf(1) / 4


def log_gamma(re: float, im: float) -> mpc:
    return mpmath.loggamma(mpc(mpf(re), mpf(im)))


def gamma(re: float, im: float) -> mpc:
    return mpmath.gamma(mpc(mpf(re), mpf(im)))


def digamma(re: float, im: float) -> mpc:
    return mpmath.digamma(mpc(mpf(re), mpf(im)))


def psi_shift(z_re: float, z_im: float, shift: float) -> mpc:
    z = mpc(mpf(z_re), mpf(z_im))
    return mpmath.digamma(z + mpf(shift)) - mpmath.digamma(z)


def theta(a, b_kind: str, b_value, g) -> mpf:
    """Theta(a, b) from the defining four-Gamma ratio."""
    a = mpf(a)
    g = mpf(g)
    if b_kind == "imaginary":
        beta = mpf(b_value)
        num = mpmath.gamma((1 + g) / 2 + (a + beta) / 2) * mpmath.gamma(
            (1 + g) / 2 + (a - beta) / 2
        )
        den = mpmath.gamma((1 - g) / 2 + (a + beta) / 2) * mpmath.gamma(
            (1 - g) / 2 + (a - beta) / 2
        )
        return mpf(4) ** g * num / den
    if b_kind != "real":
        raise ValueError(f"unknown b_kind {b_kind!r}")
    b = mpf(b_value)
    z_num = (1 + g) / 2 + mpc(a, b) / 2
    z_den = (1 - g) / 2 + mpc(a, b) / 2
    value = (
        mpf(4) ** g
        * mpmath.gamma(z_num)
        * mpmath.gamma(z_num.conjugate())
        / (mpmath.gamma(z_den) * mpmath.gamma(z_den.conjugate()))
    )
    assert abs(value.imag) <= mpf(10) ** (-(WORKING_DPS - 10)) * abs(value.real)
    return value.real


def a_m(m: int, n: int, k: int) -> mpf:
    mu = mpf(m) * (m + n - k - 2)
    half = mpf(n - k - 2) / 2
    return mpmath.sqrt(mu + half**2)


def b_of_lambda(lam, k: int) -> tuple[str, mpf]:
    lam = mpf(lam)
    half_sq = (mpf(k) / 2) ** 2
    if lam >= half_sq:
        return ("real", mpmath.sqrt(lam - half_sq))
    return ("imaginary", mpmath.sqrt(half_sq - lam))


def theta_eigenvalue(m: int, lam, n: int, k: int, g) -> mpf:
    kind, value = b_of_lambda(lam, k)
    return theta(a_m(m, n, k), kind, value, g)


def q_gamma(n: int, k: int, g) -> mpf:
    g = mpf(g)
    return (
        mpf(4) ** g
        * mpmath.gamma((n + 2 * g) / 4)
        / mpmath.gamma((n - 2 * g) / 4)
        * mpmath.gamma((n - 2 * k + 2 * g) / 4)
        / mpmath.gamma((n - 2 * k - 2 * g) / 4)
    )


def xi(n: int, g) -> mpf:
    g = mpf(g)
    return mpf(4) ** g * (
        mpmath.gamma(mpf(n) / 4 + g / 2 - _QUARTER)
        / mpmath.gamma(mpf(n) / 4 - g / 2 - _QUARTER)
    ) ** 2


def d_gamma(g) -> mpf:
    g = mpf(g)
    return mpf(4) ** g * mpmath.gamma(g) / mpmath.gamma(-g)


def jacobi_threshold(n: int, g) -> mpf:
    g = mpf(g)
    return (n + 2 * g) / (n - 2 * g) * q_gamma(n, 1, g)


def log_F(x) -> mpf:
    x = mpf(x)
    h = x / 2
    return (
        mpmath.loggamma(h + 1)
        + mpmath.loggamma(h - mpf(1) / 2)
        - 2 * mpmath.loggamma(h - _QUARTER)
    )


def F(x) -> mpf:
    return mpmath.exp(log_F(x))


def f_limit_const() -> mpf:
    return mpmath.sqrt(mpmath.pi) / mpmath.gamma(_QUARTER) ** 2


def _bisect(func, lo, hi, target_digits: int | None = None) -> mpf:
    """Deterministic sign-change bisection at working precision."""
    lo, hi = mpf(lo), mpf(hi)
    f_lo = func(lo)
    f_hi = func(hi)
    if not (f_lo < 0 < f_hi or f_hi < 0 < f_lo):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    eps = mpf(10) ** (-(target_digits or WORKING_DPS - 8))
    for _ in range(400):
        mid = (lo + hi) / 2
        f_mid = func(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo <= eps * max(mpf(1), abs(hi)):
            break
    return (lo + hi) / 2


def dlog_F(x) -> mpf:
    x = mpf(x)
    h = x / 2
    return (
        mpmath.digamma(h + 1)
        + mpmath.digamma(h - mpf(1) / 2)
        - 2 * mpmath.digamma(h - _QUARTER)
    ) / 2


def x0() -> mpf:
    return _bisect(dlog_F, mpf("1.2"), mpf(2))


def c_n(n: int) -> mpf:
    half = mpf(n) / 2

    def G(c):
        return log_F(half + c) - log_F(half - c)

    c_hi = (half - 1) * (1 - mpf(10) ** (-(WORKING_DPS - 10)))
    return _bisect(G, mpf("0.05"), c_hi)


def lambda_at_jacobi_threshold(n: int, g) -> mpf:
    """The unique lambda > 1/4 whose eigenvalue curve sits exactly on
    the Jacobi threshold (k = 1)."""
    thr = jacobi_threshold(n, g)
    a0 = mpf(n - 3) / 2
    target = mpmath.log(thr)

    def f(b):
        return mpmath.log(theta(a0, "real", b, g)) - target

    b_hi = mpf(1)
    while f(b_hi) < 0:
        b_hi *= 2
    b_root = _bisect(f, mpf(0), b_hi)
    return _QUARTER + b_root**2


def product_volume(n: int, genus: int) -> mpf:
    return (
        8 * mpmath.pi ** (mpf(n + 1) / 2) / mpmath.gamma(mpf(n - 1) / 2) * (genus - 1)
    )
