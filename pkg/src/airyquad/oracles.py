"""Reference values used by the tests, built from methods unrelated to contour quadrature.

Power series are summed in mpmath multiprecision with the working precision
raised to absorb the cancellation between terms, then rounded to binary64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import OutOfRange

AIRY_SERIES_MAX = 12.0
BESSEL_SERIES_MAX = 2000.0


@dataclass(frozen=True)
class OracleResult:
    value: complex
    est_digits: int

    @property
    def real(self) -> float:
        return self.value.real


def _to_complex(v) -> complex:
    return complex(float(mpmath.re(v)), float(mpmath.im(v)))


def airy_series(z: complex) -> OracleResult:
    """Ai(z) from its two Maclaurin series, valid for ``|z| <= 12``."""
    z = complex(z)
    if abs(z) > AIRY_SERIES_MAX:
        raise OutOfRange(f"airy_series trusted only for |z| <= {AIRY_SERIES_MAX}, got {abs(z):.3g}")
    # digits lost: largest term ~ exp(2/3 |z|^1.5), and |Ai| can be as small as its inverse
    lost = 2.0 * (2.0 / 3.0) * abs(z) ** 1.5 / math.log(10)
    with mpmath.workdps(int(30 + lost)):
        zz = mpmath.mpc(z.real, z.imag)
        z3 = zz**3
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
        c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        f_term = mpmath.mpc(1)
        g_term = zz
        f_sum, g_sum = f_term, g_term
        eps = mpmath.mpf(10) ** (-(mpmath.mp.dps - 5))
        k = 0
        while True:
            k += 1
            f_term *= z3 / ((3 * k - 1) * (3 * k))
            g_term *= z3 / ((3 * k) * (3 * k + 1))
            f_sum += f_term
            g_sum += g_term
            if abs(f_term) + abs(g_term) < eps * (abs(f_sum) + abs(g_sum)) and k > 3:
                break
        value = c1 * f_sum - c2 * g_sum
        return OracleResult(_to_complex(value), 15)


def bessel_j_series(nu: float, x: float) -> OracleResult:
    """J_nu(x) from the ascending power series, for real order and ``0 <= x <= 2000``."""
    if x < 0:
        raise OutOfRange("bessel_j_series needs x >= 0")
    if x > BESSEL_SERIES_MAX:
        raise OutOfRange(f"bessel_j_series trusted only for x <= {BESSEL_SERIES_MAX}")
    if x == 0:
        return OracleResult(1.0 if nu == 0 else 0.0, 15)
    dps = int(30 + x / math.log(10) + 0.5 * max(0.0, -nu))
    with mpmath.workdps(dps):
        v = mpmath.mpf(nu)
        half = mpmath.mpf(x) / 2
        q = -half * half
        term = half**v / mpmath.gamma(v + 1)
        total = term
        eps = mpmath.mpf(10) ** (-(dps - 5))
        k = 0
        while True:
            k += 1
            term *= q / (k * (k + v))
            total += term
            if k > half and abs(term) < eps * abs(total):
                break
        return OracleResult(complex(float(total), 0.0), 15)


def k13_integral(xi: float, h: float = 0.01) -> OracleResult:
    """K_{1/3}(xi) = int_0^inf exp(-xi cosh t) cosh(t/3) dt by a fixed fine step."""
    if xi <= 0:
        raise OutOfRange("k13_integral needs xi > 0")
    total = 0.5 * math.exp(-xi)
    k = 0
    while True:
        k += 1
        t = k * h
        decay = xi * (math.cosh(t) - 1.0)
        if decay > 40.0 + t / 3.0:
            break
        total += math.exp(-xi * math.cosh(t)) * math.cosh(t / 3.0)
    return OracleResult(complex(h * total, 0.0), 13)


def erfc(x: float) -> float:
    return math.erfc(x)


def log_gamma(x: float) -> float:
    return math.lgamma(x)


def log_factorial(n: int) -> float:
    return math.lgamma(n + 1.0)
