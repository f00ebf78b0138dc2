"""Hermite polynomials at the turning-point scaling ``x = xi sqrt(2n + 1)``.

``H_n(x) = n! exp(nu^2 A) / nu^(n + 2/3) F(eta)`` with ``nu = sqrt(2n + 1)``,
``eta = nu^(4/3) zeta`` and the Airy-type amplitude ``f(t) = g(t nu^(-2/3))``.
The front factor leaves binary64 range already for moderate n, so values
are returned as a sign and a natural log of the magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .airy import AnalyticIntegrand, eval_airy_type_log
from .errors import DomainError
from .quadrature import QuadratureConfig
from .transform import HermiteMap, hermite_geometry


@dataclass(frozen=True)
class ScaledReal:
    """``sign * exp(log_magnitude)``; ``sign == 0`` means exactly zero."""

    log_magnitude: float
    sign: int

    @classmethod
    def from_float(cls, v: float) -> "ScaledReal":
        if v == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(v)), 1 if v > 0 else -1)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.log_magnitude > 709.78:
            return self.sign * math.inf
        return self.sign * math.exp(self.log_magnitude)

    def __neg__(self) -> "ScaledReal":
        return ScaledReal(self.log_magnitude, -self.sign)

    def rel_diff(self, other: "ScaledReal") -> float:
        """|self - other| / |other|, computed without leaving log space."""
        if other.sign == 0:
            return 0.0 if self.sign == 0 else math.inf
        if self.sign == 0:
            return 1.0
        ratio = math.exp(self.log_magnitude - other.log_magnitude)
        return abs(self.sign * ratio - other.sign)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        exp10 = self.log_magnitude / math.log(10.0)
        e = math.floor(exp10)
        return f"{self.sign * 10.0 ** (exp10 - e):.15f}e{e:+d}"


def hermite_eval(n: int, x: float, cfg: QuadratureConfig | None = None) -> ScaledReal:
    """H_n(x) from the Airy-type integral. Negative x goes through ``H_n(-x) = (-1)^n H_n(x)``."""
    if n < 1 or int(n) != n:
        raise DomainError(f"degree must be an integer >= 1, got {n}")
    n = int(n)
    if x < 0:
        v = hermite_eval(n, -x, cfg)
        return -v if n % 2 else v
    nu = math.sqrt(2.0 * n + 1.0)
    geom = hermite_geometry(x / nu)
    scale = nu ** (-2.0 / 3.0)
    jac = HermiteMap(geom)
    f = AnalyticIntegrand(lambda t: jac(scale * t), real_on_real=True, check=False)
    res, log_scale = eval_airy_type_log(f, geom.eta(nu), cfg)
    F = res.value.real
    if F == 0.0:
        return ScaledReal(-math.inf, 0)
    log_front = math.lgamma(n + 1.0) + nu * nu * geom.A - (n + 2.0 / 3.0) * math.log(nu)
    return ScaledReal(log_front + log_scale + math.log(abs(F)), 1 if F > 0 else -1)


def hermite_recurrence_oracle(n: int, x: float) -> ScaledReal:
    """H_n(x) by ``H_{k+1} = 2x H_k - 2k H_{k-1}`` in 40-digit arithmetic."""
    if not 1 <= n <= 200:
        raise DomainError(f"oracle covers 1 <= n <= 200, got {n}")
    with mpmath.workdps(40):
        xx = mpmath.mpf(x)
        h_prev, h = mpmath.mpf(1), 2 * xx
        for k in range(1, n):
            h_prev, h = h, 2 * xx * h - 2 * k * h_prev
        if h == 0:
            return ScaledReal(-math.inf, 0)
        return ScaledReal(float(mpmath.log(abs(h))), 1 if h > 0 else -1)
