"""J_nu(nu z) for real order and argument by contour quadrature.

Four routes:

* ``AIRY_TYPE``: the cubic transformation onto an Airy-type integral, valid
  uniformly through the turning point z = 1;
* ``DIRECT_MONOTONIC`` (0 < z < 1): steepest descent path through
  ``s_plus = arccosh(1/z)`` of ``exp(nu (z sinh s - s))``;
* ``DIRECT_OSCILLATORY`` (z > 1): steepest descent path of the Hankel
  integral through ``i arccos(1/z)``, with ``J = Re H^(1)``;
* ``SHIFTED_CONTOUR`` (z near 1): a fixed contour translated onto the
  saddle, with the oscillation kept in the integrand.

The direct routes integrate over a finite tau interval with the midpoint
rule, doubling the node count until two levels agree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .airy import AnalyticIntegrand, eval_airy_type
from .errors import DomainError, NonConvergence
from .quadrature import QuadratureConfig, trapezoid_periodiclike
from .transform import BesselGeometry, BesselMap, bessel_zeta

N_START = 64
N_MAX = 4096
DIRECT_TOL = 1e-13
SHIFTED_ETA_LIMIT = 1.2
ACOSH2 = math.acosh(2.0)


class BesselMethod(enum.Enum):
    AIRY_TYPE = "airy"
    DIRECT_MONOTONIC = "monotonic"
    DIRECT_OSCILLATORY = "oscillatory"
    SHIFTED_CONTOUR = "shifted"


@dataclass
class DirectResult:
    """Outcome of a finite-interval quadrature. ``degraded`` means the node doubling never settled."""

    value: complex
    nodes: int
    est_error: float
    degraded: bool = False

    def __float__(self) -> float:
        return float(self.value.real)


@dataclass
class BesselValue:
    value: float
    method: BesselMethod
    fallback: bool = False
    est_error: float = math.nan

    def __float__(self) -> float:
        return self.value


def _check(nu: float, z: float) -> None:
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu}")
    if not z > 0:
        raise DomainError(f"z must be positive, got {z}")


def method_eta(nu: float, z: float) -> float:
    """eta = +-(3 nu rho / 2)^(2/3) with the sign of 1 - z."""
    _check(nu, z)
    g = bessel_zeta(z)
    value = (1.5 * nu * g.rho) ** (2.0 / 3.0)
    return value if z <= 1.0 else -value


def select_method(nu: float, z: float) -> BesselMethod:
    eta = method_eta(nu, z)
    if eta > 1.0:
        return BesselMethod.DIRECT_MONOTONIC
    if eta < -1.0:
        return BesselMethod.DIRECT_OSCILLATORY
    return BesselMethod.SHIFTED_CONTOUR


def peak_width(nu: float, curvature: float) -> float:
    """Width in tau of ``exp(-nu psi)`` with ``psi ~ curvature tau^2`` away from z = 1 and ``~ |tau|^3`` at z = 1."""
    cubic = (4.0 / nu) ** (1.0 / 3.0)
    if curvature <= 0:
        return cubic
    return min(cubic, 1.0 / math.sqrt(nu * curvature)) if nu * curvature > 0 else cubic


def _midpoint(g, a: float, b: float, n_nodes: int | None, width: float = math.inf) -> DirectResult:
    """Midpoint rule on [a, b]; fixed n when given, else doubling from N_START to N_MAX.

    The start is raised until a few nodes fall inside the peak of width
    ``width``; a peak too narrow for N_MAX nodes is reported as degraded
    without evaluating anything.
    """
    if n_nodes is not None:
        coarse = trapezoid_periodiclike(g, a, b, max(2, n_nodes // 2))
        value = trapezoid_periodiclike(g, a, b, n_nodes)
        err = abs(value - coarse) / abs(value) if value != 0 else abs(value - coarse)
        return DirectResult(complex(value), n_nodes, err)
    n = N_START
    while (b - a) / n > width / 3.0:
        n *= 2
        if n > N_MAX:
            return DirectResult(complex(math.nan, 0.0), 0, math.inf, degraded=True)
    prev = trapezoid_periodiclike(g, a, b, n)
    while n < N_MAX:
        n *= 2
        value = trapezoid_periodiclike(g, a, b, n)
        err = abs(value - prev) / abs(value) if value != 0 else abs(value - prev)
        if err < DIRECT_TOL and value != 0:
            return DirectResult(complex(value), n, err)
        prev = value
    return DirectResult(complex(value), n, err, degraded=True)


# --- 0 < z <= 1: path through arccosh(1/z) ----------------------------------


def monotonic_sigma(tau: float, z: float) -> float:
    """sigma(tau) on ``z cosh(sigma) sin(tau) = tau``."""
    if tau == 0.0:
        return math.acosh(1.0 / z)
    return math.acosh(tau / (z * math.sin(tau)))


def j_direct_monotonic(nu: float, z: float, n_nodes: int | None = None) -> DirectResult:
    """``J = exp(-nu rho)/(2 pi) int_{-pi}^{pi} exp(-nu psi(tau)) dtau``, ``psi = -rho - z sinh(sigma) cos(tau) + sigma``.

    z = 1 is accepted so that the loss of analyticity at tau = 0 there can
    be observed (the result then comes back degraded).
    """
    _check(nu, z)
    if z > 1.0:
        raise DomainError(f"j_direct_monotonic needs 0 < z <= 1, got {z}")
    geom = bessel_zeta(z)
    rho = geom.rho

    def integrand(tau: float) -> float:
        sigma = monotonic_sigma(tau, z)
        psi = -rho - z * math.sinh(sigma) * math.cos(tau) + sigma
        if nu * psi > 745.0:
            return 0.0
        return math.exp(-nu * psi)

    res = _midpoint(integrand, -math.pi, math.pi, n_nodes, peak_width(nu, 0.5 * math.sqrt(max(geom.q, 0.0))))
    res.value = res.value * math.exp(-nu * rho) / (2.0 * math.pi)
    return res


# --- z > 1: Hankel path through i arccos(1/z) --------------------------------


def _oscillatory_point(tau: float, z: float, a: float, s_plus: float) -> tuple[float, float, float]:
    """(sigma, dsigma/dtau, psi_tilde) on ``z cosh(sigma) sin(tau) - tau = rho_tilde``.

    Written in ``d = tau - s_plus`` so that nothing cancels near the saddle.
    """
    d = tau - s_plus
    sh2 = math.sin(0.5 * d)
    sin_d, cos_d = math.sin(d), math.cos(d)
    z_sin = a * cos_d + sin_d
    z_cos = cos_d - a * sin_d
    x = (2.0 * a * sh2 * sh2 + (d - sin_d)) / z_sin  # cosh(sigma) - 1
    sigma = math.log1p(x + math.sqrt(x * (x + 2.0)))
    if d < 0:
        sigma = -sigma
    if d == 0.0:
        dsig = 1.0
    else:
        num = 2.0 * sh2 * sh2 + a * sin_d - x * z_cos
        dsig = num / (math.sinh(sigma) * z_sin)
    sinh_s = math.sinh(sigma)
    shm = sinh_s - sigma if abs(sigma) > 1e-3 else sigma**3 / 6.0 * (1.0 + sigma * sigma / 20.0)
    psi = -shm + sinh_s * (2.0 * sh2 * sh2 + a * sin_d)
    return sigma, dsig, psi


def h1_direct_oscillatory(nu: float, z: float, n_nodes: int | None = None) -> DirectResult:
    """``H^(1)_nu(nu z) = exp(i nu rho_tilde)/(pi i) int_0^pi exp(-nu psi_tilde)(dsigma/dtau + i) dtau`` for z > 1."""
    _check(nu, z)
    if not z > 1.0:
        raise DomainError(f"h1_direct_oscillatory needs z > 1, got {z}")
    a = math.sqrt((z - 1.0) * (z + 1.0))
    s_plus = math.atan(a)
    rho_t = a - s_plus

    def integrand(tau: float) -> complex:
        _, dsig, psi = _oscillatory_point(tau, z, a, s_plus)
        if nu * psi > 745.0:
            return 0j
        return math.exp(-nu * psi) * complex(dsig, 1.0)

    res = _midpoint(integrand, 0.0, math.pi, n_nodes, peak_width(nu, a))
    phase = complex(math.cos(nu * rho_t), math.sin(nu * rho_t))
    res.value = res.value * phase / (math.pi * 1j)
    return res


def j_direct_oscillatory(nu: float, z: float, n_nodes: int | None = None) -> DirectResult:
    res = h1_direct_oscillatory(nu, z, n_nodes)
    res.value = complex(res.value.real, 0.0)
    return res


# --- |eta| small: shifted fixed contour ---------------------------------------


def _sin_minus_tau_cos(tau: float) -> float:
    """sin(tau) - tau cos(tau), by series where it cancels."""
    if abs(tau) > 0.1:
        return math.sin(tau) - tau * math.cos(tau)
    t2 = tau * tau
    term = tau * t2 / 3.0
    total = term
    k = 1
    while abs(term) > 1e-18 * abs(total):
        # ratio of consecutive terms of sum (-1)^(k+1) 2k tau^(2k+1)/(2k+1)!
        term *= -t2 * (k + 1) / (k * (2 * k + 2) * (2 * k + 3))
        total += term
        k += 1
    return total


def shifted_offset(z: float) -> float:
    """Constant c in ``sigma = arccosh(2 tau / sin tau) - c``."""
    if z <= 1.0:
        return ACOSH2 - bessel_zeta(z).s_plus.real
    a = math.sqrt((z - 1.0) * (z + 1.0))
    return math.acosh(2.0 * z * math.atan(a) / a)


def shifted_point(tau: float, z: float, c: float) -> tuple[float, float]:
    """(sigma, dsigma/dtau) on the shifted contour."""
    if tau == 0.0:
        return ACOSH2 - c, 0.0
    sin_t = math.sin(tau)
    g = 2.0 * tau / sin_t
    sigma = math.acosh(g) - c
    dsig = 2.0 * _sin_minus_tau_cos(tau) / (sin_t * sin_t * math.sqrt((g - 1.0) * (g + 1.0)))
    return sigma, dsig


def j_shifted_contour(nu: float, z: float, n_nodes: int | None = None, *, check_eta: bool = True) -> DirectResult:
    """``J = 1/(2 pi) int_{-pi}^{pi} exp(-nu p) (cos r + sin r dsigma/dtau) dtau`` on the shifted contour."""
    _check(nu, z)
    if check_eta:
        eta = method_eta(nu, z)
        if abs(eta) > SHIFTED_ETA_LIMIT:
            raise DomainError(f"shifted contour validated only for |eta| <= {SHIFTED_ETA_LIMIT}, got eta={eta:.3g}")
    c = shifted_offset(z)

    def integrand(tau: float) -> float:
        sigma, dsig = shifted_point(tau, z, c)
        p = sigma - z * math.sinh(sigma) * math.cos(tau)
        if nu * p > 745.0:
            return 0.0
        r = nu * (z * math.cosh(sigma) * math.sin(tau) - tau)
        return math.exp(-nu * p) * (math.cos(r) + math.sin(r) * dsig)

    res = _midpoint(integrand, -math.pi, math.pi, n_nodes, peak_width(nu, 0.0))
    res.value = res.value / (2.0 * math.pi)
    return res


# --- Airy-type route ------------------------------------------------------------


def j_airy_type(
    nu: float, z: float | None = None, cfg: QuadratureConfig | None = None, *, geom: BesselGeometry | None = None
) -> float:
    """``J = nu^(-1/3) F(eta)`` with ``f(t) = h(nu^(-1/3) t)``, ``eta = nu^(2/3) zeta``.

    Pass ``geom`` instead of z to keep a z that was built from zeta (and so
    carries an accurate 1 - z).
    """
    if geom is None:
        if z is None:
            raise ValueError("give z or geom")
        _check(nu, z)
        geom = bessel_zeta(z)
    elif not nu > 0:
        raise DomainError(f"order must be positive, got {nu}")
    scale = nu ** (-1.0 / 3.0)
    jac = BesselMap(geom)
    f = AnalyticIntegrand(lambda t: jac(scale * t), real_on_real=True, check=False)
    res = eval_airy_type(f, geom.eta(nu), cfg)
    return res.value.real * scale


# --- facade -----------------------------------------------------------------------

_DIRECT = {
    BesselMethod.DIRECT_MONOTONIC: j_direct_monotonic,
    BesselMethod.DIRECT_OSCILLATORY: j_direct_oscillatory,
    BesselMethod.SHIFTED_CONTOUR: j_shifted_contour,
}


def bessel_j(
    nu: float, z: float, method: BesselMethod | str = "auto", *, one_minus_z: float | None = None
) -> BesselValue:
    """J_nu(nu z). With ``method="auto"`` the route follows ``select_method``.

    A direct route that comes back degraded is replaced by the Airy-type
    route, and the result is flagged with ``fallback=True``.
    """
    _check(nu, z)
    if isinstance(method, str):
        method = select_method(nu, z) if method == "auto" else BesselMethod(method)
    if method is BesselMethod.AIRY_TYPE:
        return BesselValue(j_airy_type(nu, geom=bessel_zeta(z, one_minus_z)), method)
    res = _DIRECT[method](nu, z)
    if res.degraded:
        try:
            return BesselValue(j_airy_type(nu, geom=bessel_zeta(z, one_minus_z)), method, fallback=True)
        except NonConvergence:
            pass
    return BesselValue(float(res), method, est_error=res.est_error)


def bessel_jx(nu: float, x: float, method: BesselMethod | str = "auto") -> BesselValue:
    """J_nu(x) via ``z = x / nu``; ``1 - z = (nu - x)/nu`` is exact when x is close to nu."""
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu}")
    return bessel_j(nu, x / nu, method, one_minus_z=(nu - x) / nu)


def recurrence_check(nu: float, x: float, method: BesselMethod | str = "auto") -> float:
    """``|2 nu J_nu(x) - x (J_{nu-1}(x) + J_{nu+1}(x))| / (2 nu |J_nu(x)|)``."""
    if nu < 2:
        raise DomainError("recurrence_check needs nu >= 2")
    if not x > 0:
        raise DomainError("recurrence_check needs x > 0")
    jm = bessel_jx(nu - 1.0, x, method).value
    j0 = bessel_jx(nu, x, method).value
    jp = bessel_jx(nu + 1.0, x, method).value
    return abs(2.0 * nu * j0 - x * (jm + jp)) / (2.0 * nu * abs(j0))
