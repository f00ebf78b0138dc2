"""Cubic changes of variable onto ``r^3/3 - zeta r + A`` for the Bessel and Hermite phases.

Two pieces live here:

* the zeta maps (``z -> zeta`` for ``J_nu(nu z)``, ``xi -> zeta`` for the
  scaled Hermite polynomial), written through a power series in
  ``q = 1 - z^2`` (resp. ``xi^2 - 1``) near coalescence so they stay smooth
  through the turning point;
* the inverse map ``r -> s`` solved by Newton with continuation from the
  saddle, and the Jacobian factors ``h(r)`` / ``g(r)`` built from it. The
  Jacobians have a removable 0/0 at the saddle; inside a small disk around
  it they are evaluated from a Taylor polynomial whose coefficients come
  from a trapezoidal (DFT) sum over a ring of directly computed values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DomainError, NonConvergence

SERIES_BAND = 0.05
RING_POINTS = 48
NEWTON_MAXIT = 50


# --- zeta maps --------------------------------------------------------------


def _bessel_G(q: float) -> float:
    """sum_k q^k / (2k + 3); (arctanh(s) - s) = s^3 G(s^2)."""
    total, term, k = 0.0, 1.0, 0
    while True:
        c = term / (2 * k + 3)
        total += c
        if abs(c) < 1e-18 * abs(total):
            return total
        k += 1
        term *= q
        if k > 400:
            raise NonConvergence("zeta series did not converge")


def _bessel_G_prime(q: float) -> float:
    total, term, k = 0.0, 1.0, 1
    while True:
        c = k * term / (2 * k + 3)
        total += c
        if abs(c) < 1e-18 * max(abs(total), 1e-300):
            return total
        k += 1
        term *= q
        if k > 400:
            raise NonConvergence("zeta series did not converge")


def _hermite_G(q: float) -> float:
    """sum_k binom(-1/2, k) q^k / (2k + 3); (xi S - arcsinh S) = 2 S^3 G(S^2)."""
    total, coef, k = 0.0, 1.0, 0
    while True:
        c = coef / (2 * k + 3)
        total += c
        if abs(c) < 1e-18 * abs(total):
            return total
        coef *= q * (-0.5 - k) / (k + 1)
        k += 1
        if k > 400:
            raise NonConvergence("zeta series did not converge")


def _zeta_from_q(q: float, G: float) -> float:
    return q * (1.5 * G) ** (2.0 / 3.0)


@dataclass(frozen=True)
class BesselGeometry:
    """Geometry of ``J_nu(nu z)`` around its turning point z = 1.

    ``one_minus_z`` and ``q = 1 - z^2`` are stored separately because both
    must stay accurate when z is within a few ulps of 1. ``rho`` is the
    exponent of the dominant factor: ``arctanh(sqrt q) - sqrt q`` for
    z <= 1, ``sqrt(-q) - arctan(sqrt(-q))`` for z >= 1. ``s_plus`` is the
    saddle matched with ``r = sqrt(zeta)``: real for z < 1, on the positive
    imaginary axis for z > 1.
    """

    z: float
    one_minus_z: float
    q: float
    zeta: float
    rho: float
    s_plus: complex
    kappa: float  # zeta / q, analytic and positive through z = 1

    def eta(self, nu: float) -> float:
        return nu ** (2.0 / 3.0) * self.zeta

    @property
    def saddle_r(self) -> complex:
        return _principal_sqrt(self.zeta)

    @property
    def h_saddle(self) -> float:
        """h(sqrt(zeta)) = (4 zeta / (1 - z^2))^(1/4)."""
        return (4.0 * self.kappa) ** 0.25


def _principal_sqrt(x: float) -> complex:
    return complex(math.sqrt(x), 0.0) if x >= 0 else complex(0.0, math.sqrt(-x))


def _bessel_geometry(z: float, one_minus_z: float, q: float, zeta: float | None) -> BesselGeometry:
    if zeta is None:
        if abs(one_minus_z) < SERIES_BAND:
            G = _bessel_G(q)
            zeta = _zeta_from_q(q, G)
        elif q > 0:
            s = math.sqrt(q)
            zeta = (1.5 * (math.atanh(s) - s)) ** (2.0 / 3.0)
        else:
            S = math.sqrt(-q)
            zeta = -((1.5 * (S - math.atan(S))) ** (2.0 / 3.0))
    if q == 0.0:
        kappa = 2.0 ** (-2.0 / 3.0)
    elif abs(q) < 0.1:
        kappa = (1.5 * _bessel_G(q)) ** (2.0 / 3.0)
    else:
        kappa = zeta / q
    rho = 2.0 / 3.0 * abs(zeta) ** 1.5
    if q >= 0:
        s_plus = complex(math.atanh(math.sqrt(q)), 0.0)
    else:
        s_plus = complex(0.0, math.atan(math.sqrt(-q)))
    return BesselGeometry(z, one_minus_z, q, zeta, rho, s_plus, kappa)


def bessel_zeta(z: float, one_minus_z: float | None = None) -> BesselGeometry:
    """zeta(z) with ``2/3 zeta^{3/2} = arccosh(1/z) - sqrt(1 - z^2)`` (z <= 1) and its z >= 1 twin.

    ``one_minus_z`` may be supplied when the caller knows it more accurately
    than ``1 - z`` evaluates in floating point.
    """
    if not z > 0:
        raise DomainError(f"bessel_zeta needs z > 0, got {z}")
    omz = 1.0 - z if one_minus_z is None else one_minus_z
    q = omz * (1.0 + z)
    return _bessel_geometry(z, omz, q, None)


def _newton_real(step, x: float, zeta: float) -> float:
    """Newton with a stop at the rounding floor; ``step(x)`` returns f/f'."""
    last = math.inf
    for _ in range(200):
        dx = step(x)
        x -= dx
        if abs(dx) <= 4e-16 * abs(x) or (abs(dx) <= 1e-11 * abs(x) and abs(dx) > 0.25 * last):
            return x
        last = abs(dx)
    raise NonConvergence(f"Newton for z(zeta={zeta}) failed")


def _q_from_zeta_series(zeta: float) -> float:
    def step(q: float) -> float:
        G = _bessel_G(q)
        K = (1.5 * G) ** (2.0 / 3.0)
        dK = (1.5 * G) ** (-1.0 / 3.0) * _bessel_G_prime(q)
        return (q * K - zeta) / (K + q * dK)

    return _newton_real(step, 2.0 ** (2.0 / 3.0) * zeta, zeta)


def bessel_geometry_from_zeta(zeta: float) -> BesselGeometry:
    """Geometry for a prescribed zeta, with 1 - z computed first so that z near 1 keeps full accuracy."""
    if zeta == 0.0:
        return _bessel_geometry(1.0, 0.0, 0.0, 0.0)
    if abs(zeta) < 0.06:
        q = _q_from_zeta_series(zeta)
        root = math.sqrt(1.0 - q)
        omz = q / (1.0 + root)
        return _bessel_geometry(1.0 - omz, omz, q, zeta)
    rho = 2.0 / 3.0 * abs(zeta) ** 1.5
    if zeta > 0:
        if zeta > (1.5 * 745.0) ** (2.0 / 3.0):
            raise DomainError(f"zeta={zeta} corresponds to z below the binary64 range")
        # u - tanh(u) = rho with s = tanh(u), z = sech(u)
        u = _newton_real(
            lambda u: (u - math.tanh(u) - rho) / math.tanh(u) ** 2, max(rho + 1.0, (3.0 * rho) ** (1.0 / 3.0)), zeta
        )
        z = 1.0 / math.cosh(u)
        q = math.tanh(u) ** 2
        return _bessel_geometry(z, 1.0 - z, q, zeta)
    S = _newton_real(
        lambda S: (S - math.atan(S) - rho) * (1.0 + S * S) / (S * S), max(rho + 0.5 * math.pi, (3.0 * rho) ** (1.0 / 3.0)), zeta
    )
    z = math.sqrt(1.0 + S * S)
    return _bessel_geometry(z, 1.0 - z, -S * S, zeta)


def bessel_z_from_zeta(zeta: float) -> float:
    return bessel_geometry_from_zeta(zeta).z


@dataclass(frozen=True)
class HermiteGeometry:
    """Geometry of ``H_n(nu xi)``, ``nu = sqrt(2n + 1)``, for xi >= 0.

    ``s_minus`` is the saddle matched with ``r = sqrt(zeta)``; for xi < 1 it
    is the one in the lower half plane.
    """

    xi: float
    q: float  # xi^2 - 1
    zeta: float
    A: float
    s_minus: complex
    s_plus: complex
    kappa: float  # zeta / q

    def eta(self, nu: float) -> float:
        return nu ** (4.0 / 3.0) * self.zeta

    @property
    def saddle_r(self) -> complex:
        return _principal_sqrt(self.zeta)

    @property
    def g_saddle(self) -> float:
        return self.kappa**0.25


def hermite_geometry(xi: float) -> HermiteGeometry:
    if xi < 0:
        raise DomainError(f"hermite_geometry needs xi >= 0 (reflect by parity first), got {xi}")
    q = (xi - 1.0) * (xi + 1.0)
    if abs(xi - 1.0) < SERIES_BAND:
        G = _hermite_G(q)
        zeta = _zeta_from_q(q, G)
        kappa = (1.5 * G) ** (2.0 / 3.0)
    else:
        if xi > 1.0:
            S = math.sqrt(q)
            zeta = (0.75 * (xi * S - math.acosh(xi))) ** (2.0 / 3.0)
        else:
            T = math.sqrt(-q)
            zeta = -((0.75 * (math.acos(xi) - xi * T)) ** (2.0 / 3.0))
        kappa = zeta / q
    A = 0.5 * xi * xi + 0.25 + 0.5 * math.log(2.0)
    if q >= 0:
        S = math.sqrt(q)
        s_minus, s_plus = complex(0.5 * (xi - S)), complex(0.5 * (xi + S))
    else:
        T = math.sqrt(-q)
        s_minus, s_plus = complex(0.5 * xi, -0.5 * T), complex(0.5 * xi, 0.5 * T)
    return HermiteGeometry(xi, q, zeta, A, s_minus, s_plus, kappa)


# --- inverse maps -----------------------------------------------------------


def _expm1(w: complex) -> complex:
    """exp(w) - 1 for complex w, accurate for small |w|."""
    x, y = w.real, w.imag
    sy = math.sin(0.5 * y)
    return complex(math.expm1(x) * math.cos(y) - 2.0 * sy * sy, math.exp(x) * math.sin(y))


def _sinh_minus_id(s: complex) -> complex:
    """sinh(s) - s without cancellation for small |s|."""
    if abs(s) < 0.5:
        s2 = s * s
        term = s * s2 / 6.0
        total = term
        k = 1
        while abs(term) > 1e-17 * abs(total):
            term *= s2 / ((2 * k + 2) * (2 * k + 3))
            total += term
            k += 1
        return total
    return cmath.sinh(s) - s


class _CubicMap:
    """Inverse of ``phase(s) = r^3/3 - zeta r + A`` on the branch fixed by the saddle pair.

    Newton works in an internal variable ``v`` (``s`` itself for Bessel,
    ``ln s`` for Hermite so that the log surface needs no cut). Solutions
    are found from a linear predictor off the nearest already-solved point;
    a predictor that fails to converge, or lands too far from its
    prediction, triggers bisection of the step. The solved points are
    per-instance, so one instance should not be shared between threads.
    """

    zeta: float
    r0: complex
    v0: complex
    dvdr0: complex
    abs_scale = 0.0

    def __init__(self):
        self._pts: list[tuple[complex, complex, complex]] = [(self.r0, self.v0, self.dvdr0)]
        ell = abs(self.zeta) ** 0.5
        self.delta = 0.1 * max(1.0, ell)
        ring = 2.0 * self.delta
        other = 2.0 * ell
        # keep ring nodes well away from the second (mirror) saddle
        if 0.7 * ring < other < 1.3 * ring:
            ring = other / 1.6
            self.delta = 0.5 * ring
        self.ring_radius = ring
        self._coef: np.ndarray | None = None

    def rhs_delta(self, r: complex) -> complex:
        """``(r^3/3 - zeta r) - (r0^3/3 - zeta r0)`` without the cancellation near r0."""
        e = r - self.r0
        return e * e * (r + 2.0 * self.r0) / 3.0 + e * (self.r0 * self.r0 - self.zeta)

    # subclass hooks; residual and dphase are written relative to the saddle
    # (phase(v) - phase(v0)), so both stay accurate where they vanish
    def residual(self, v: complex, r: complex) -> complex:
        raise NotImplementedError

    def dphase(self, v: complex) -> complex:
        raise NotImplementedError

    def factor(self, v: complex) -> complex:
        return 1.0

    def to_s(self, v: complex) -> complex:
        return v

    def _newton(self, v: complex, r: complex) -> complex:
        scale = max(abs(v), 1e-300)
        last = math.inf
        for _ in range(NEWTON_MAXIT):
            d = self.dphase(v)
            if d == 0:
                raise NonConvergence("zero derivative in Newton step")
            dv = self.residual(v, r) / d
            v = v - dv
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                break
            size = max(abs(v), self.abs_scale, scale * 1e-3)
            if abs(dv) <= 4e-16 * size:
                return v
            # rounding floor: the correction stopped shrinking quadratically
            if abs(dv) <= 1e-11 * size and abs(dv) > 0.25 * last:
                return v
            last = abs(dv)
        raise NonConvergence(f"Newton for the inverse map did not converge at r={r}")

    def _slope(self, r: complex, v: complex) -> complex:
        if abs(r - self.r0) < 0.5 * self.delta:
            return self.dvdr0
        return (r * r - self.zeta) / self.dphase(v)

    def _march(self, r_a: complex, v_a: complex, d_a: complex, r: complex, depth: int = 0) -> complex:
        step = r - r_a
        pred = v_a + d_a * step
        if abs(step) <= 1e-8 * max(1.0, abs(r)):
            # predictor error is O(step^2), below rounding; Newton would only
            # add noise here since the derivative vanishes at the saddle
            return pred
        try:
            v = self._newton(pred, r)
            ok = abs(v - pred) <= 0.3 * abs(d_a) * abs(step) + 1e-15 * abs(v)
        except NonConvergence:
            ok = False
        if ok:
            return v
        if depth > 40:
            raise NonConvergence(f"continuation to r={r} failed (geometry zeta={self.zeta})")
        r_m = r_a + 0.5 * step
        v_m = self._march(r_a, v_a, d_a, r_m, depth + 1)
        d_m = self._slope(r_m, v_m)
        self._pts.append((r_m, v_m, d_m))
        return self._march(r_m, v_m, d_m, r, depth + 1)

    def solve(self, r: complex) -> complex:
        """Internal variable at r, continued from the matched saddle."""
        r = complex(r)
        r_a, v_a, d_a = min(self._pts, key=lambda p: abs(p[0] - r))
        if r_a == r:
            return v_a
        v = self._march(r_a, v_a, d_a, r)
        self._pts.append((r, v, self._slope(r, v)))
        return v

    def invert(self, r: complex) -> complex:
        """s(r) on the branch continued from the matched saddle."""
        return self.to_s(self.solve(r))

    def direct(self, r: complex) -> complex:
        """Jacobian factor evaluated straight from the transform relation."""
        v = self.solve(r)
        return self.factor(v) * (r * r - self.zeta) / self.dphase(v)

    def _ring_coefficients(self) -> np.ndarray:
        if self._coef is None:
            n = RING_POINTS
            R = self.ring_radius
            start = 1.0 if self.zeta >= 0 else 1j
            vals = np.empty(n, dtype=complex)
            for j in range(n):
                r = self.r0 + R * start * cmath.exp(2j * math.pi * j / n)
                vals[j] = self.direct(r)
            self._coef = np.fft.fft(vals) / n
        return self._coef

    def local(self, r: complex) -> complex:
        """Taylor polynomial about the saddle from the ring samples."""
        coef = self._ring_coefficients()
        start = 1.0 if self.zeta >= 0 else 1j
        x = (complex(r) - self.r0) / (self.ring_radius * start)
        acc = 0j
        for c in coef[::-1]:
            acc = acc * x + c
        return acc

    def __call__(self, r: complex) -> complex:
        r = complex(r)
        if abs(r - self.r0) < self.delta:
            return self.local(r)
        return self.direct(r)


class BesselMap(_CubicMap):
    """``z sinh s - s = r^3/3 - zeta r`` with ``(s_plus, sqrt(zeta))`` matched; jacobian ``h = ds/dr``."""

    def __init__(self, geom: BesselGeometry):
        self.geom = geom
        self.zeta = geom.zeta
        self.omz = geom.one_minus_z
        self.r0 = geom.saddle_r
        self.v0 = geom.s_plus
        self.dvdr0 = complex(geom.h_saddle)
        self._constants()
        super().__init__()

    def _constants(self):
        geom = self.geom
        # z sinh(s_plus) and z cosh(s_plus) - 1 (zero up to rounding)
        if geom.q >= 0:
            self.z_sinh0 = complex(math.sqrt(geom.q))
        else:
            self.z_sinh0 = complex(0.0, math.sqrt(-geom.q))
        self.c1 = geom.z * cmath.cosh(self.v0) - 1.0

    def residual(self, s, r):
        d = s - self.v0
        sh = cmath.sinh(0.5 * d)
        lhs = 2.0 * self.z_sinh0 * sh * sh + _sinh_minus_id(d) + self.c1 * cmath.sinh(d)
        return lhs - self.rhs_delta(r)

    def dphase(self, s):
        d = s - self.v0
        sh = cmath.sinh(0.5 * d)
        return self.c1 * cmath.cosh(d) + 2.0 * sh * sh + self.z_sinh0 * cmath.sinh(d)


class HermiteMap(_CubicMap):
    """``2 xi s - ln(s)/2 - s^2 = r^3/3 - zeta r + A`` with ``(s_minus, sqrt(zeta))`` matched.

    Jacobian ``g = -(1/sqrt(s)) ds/dr``. Newton runs in ``u = ln s``, which
    removes the logarithmic cut; ``sqrt(s) = exp(u/2)`` then follows the
    contour continuously.
    """

    abs_scale = 1.0

    def __init__(self, geom: HermiteGeometry):
        self.geom = geom
        self.zeta = geom.zeta
        self.xi = geom.xi
        self.A = geom.A
        self.r0 = geom.saddle_r
        self.v0 = cmath.log(geom.s_minus)
        # du/dr = (ds/dr)/s with ds/dr = -sqrt(s) kappa^(1/4)
        self.dvdr0 = -geom.kappa**0.25 / cmath.sqrt(geom.s_minus)
        s0 = geom.s_minus
        self.a = 2.0 * self.xi * s0
        self.b = s0 * s0
        self.c1 = self.a - 0.5 - 2.0 * self.b  # zero up to rounding
        super().__init__()

    def residual(self, u, r):
        d = u - self.v0
        lhs = self.a * _expm1(d) - 0.5 * d - self.b * _expm1(2.0 * d)
        return lhs - self.rhs_delta(r)

    def dphase(self, u):
        d = u - self.v0
        return self.c1 + self.a * _expm1(d) - 2.0 * self.b * _expm1(2.0 * d)

    def factor(self, u):
        return -cmath.exp(0.5 * u)

    def to_s(self, u):
        return cmath.exp(u)

    def invert_principal(self, r: complex) -> complex:
        """s(r), refusing points whose continuation has left the principal sheet of ln s."""
        u = self.solve(r)
        if not -math.pi < u.imag <= math.pi:
            raise BranchError(f"continuation to r={r} crosses the cut of ln(s) (arg s = {u.imag:.3f})")
        return cmath.exp(u)


def bessel_invert_map(r: complex, geom: BesselGeometry) -> complex:
    return BesselMap(geom).invert(r)


def bessel_h(r: complex, geom: BesselGeometry) -> complex:
    """h(r) = ds/dr = (r^2 - zeta) / (z cosh s - 1), smooth through the saddle."""
    return BesselMap(geom)(r)


def hermite_invert_map(r: complex, geom: HermiteGeometry) -> complex:
    return HermiteMap(geom).invert_principal(r)


def hermite_g(r: complex, geom: HermiteGeometry) -> complex:
    """g(r) = 2 sqrt(s) (r^2 - zeta) / (4 s^2 - 4 xi s + 1), smooth through the saddle."""
    return HermiteMap(geom)(r)
