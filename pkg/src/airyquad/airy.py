"""Airy-type integrals ``F(eta) = 1/(2 pi i) int_C exp(t^3/3 - eta t) f(t) dt``.

The contour C runs from ``inf exp(-pi i/3)`` to ``inf exp(pi i/3)``. Three
contour choices are used depending on eta:

* eta > 1: steepest descent path through ``sqrt(eta)``, mapped onto a
  Gaussian integrand over the real line;
* eta < -1: the two steepest descent paths through ``+-i sqrt(-eta)``;
* |eta| <= 1: one fixed path crossing the real axis at t = 2, valid for
  complex eta in the closed unit disk as well.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import UnsupportedEta
from .quadrature import (
    LineIntegrand,
    QuadratureConfig,
    QuadratureResult,
    Symmetry,
    trapezoid_refine,
)

SQRT3 = math.sqrt(3.0)

DEFAULT_STEP = {"eta_large": 0.3, "eta_mid": 0.05, "eta_neg": 0.2}


class Regime(enum.Enum):
    ETA_LARGE = "eta_large"
    ETA_MID = "eta_mid"
    ETA_NEG = "eta_neg"


@dataclass
class AnalyticIntegrand:
    """The amplitude ``f`` of an Airy-type integral.

    ``real_on_real`` promises ``f(conj t) = conj f(t)``; it is spot-checked on
    a few real points at construction.
    """

    eval: Callable[[complex], complex]
    real_on_real: bool = False
    growth_hint: float | None = None
    check: bool = True

    def __post_init__(self):
        if self.real_on_real and self.check:
            for x in (0.0, 1.0, -1.0, 2.0, -2.0):
                v = complex(self.eval(complex(x, 0.0)))
                if abs(v.imag) > 1e-12 * max(1.0, abs(v)):
                    raise ValueError(f"integrand declared real_on_real but f({x}) = {v}")

    def __call__(self, t: complex) -> complex:
        return self.eval(t)

    def reflected(self) -> "AnalyticIntegrand":
        """The Schwarz reflection ``t -> conj(f(conj t))``."""
        f = self.eval
        return AnalyticIntegrand(lambda t: f(t.conjugate()).conjugate(), self.real_on_real, self.growth_hint, False)


def _as_integrand(f) -> AnalyticIntegrand:
    if isinstance(f, AnalyticIntegrand):
        return f
    return AnalyticIntegrand(f)


ONE = AnalyticIntegrand(lambda t: 1.0, real_on_real=True, check=False)


def regime_for(eta: complex) -> Regime:
    eta = complex(eta)
    if eta.imag != 0.0:
        if abs(eta) > 1.0:
            raise UnsupportedEta(f"complex eta must satisfy |eta| <= 1, got {eta}")
        return Regime.ETA_MID
    if eta.real > 1.0:
        return Regime.ETA_LARGE
    if eta.real < -1.0:
        return Regime.ETA_NEG
    return Regime.ETA_MID


def default_config(regime: Regime, cfg: QuadratureConfig | None = None, eta: complex = 0.0) -> QuadratureConfig:
    """``cfg`` if given, else the regime's default step.

    Away from the unit disk the Gaussian width of the integrand shrinks like
    ``xi^(-1/2)`` with ``xi = 2/3 |eta|^(3/2)``, and the step follows it.
    """
    if cfg is not None:
        return cfg
    h = DEFAULT_STEP[regime.value]
    if regime is not Regime.ETA_MID:
        xi = 2.0 / 3.0 * abs(complex(eta).real) ** 1.5
        h = min(h, 1.0 / math.sqrt(xi))
    return QuadratureConfig(h=h)


def eval_airy_type(f, eta: complex, cfg: QuadratureConfig | None = None) -> QuadratureResult:
    """Evaluate F(eta) for the amplitude ``f``, dispatching on the regime of eta.

    When ``cfg`` is None the per-regime default step is used and refined
    by halving. The result tag records the regime.
    """
    f = _as_integrand(f)
    regime = regime_for(eta)
    cfg = default_config(regime, cfg, eta)
    if regime is Regime.ETA_LARGE:
        return eval_eta_large(f, complex(eta).real, cfg)
    if regime is Regime.ETA_NEG:
        return eval_eta_neg(f, complex(eta).real, cfg)
    return eval_eta_mid(f, eta, cfg)


def eval_airy_type_log(f, eta: float, cfg: QuadratureConfig | None = None) -> tuple[QuadratureResult, float]:
    """(result, log_scale) with ``F(eta) = result.value * exp(log_scale)``, for real eta.

    Only the eta > 1 regime has a scale (``-2/3 eta^{3/2}``); keeping it apart
    lets callers work in log space where ``F`` itself would underflow.
    """
    f = _as_integrand(f)
    regime = regime_for(eta)
    if regime is Regime.ETA_LARGE:
        eta = complex(eta).real
        res = eval_eta_large(f, eta, default_config(regime, cfg, eta), drop_exp=True)
        return res, -2.0 / 3.0 * eta ** 1.5
    return eval_airy_type(f, eta, cfg), 0.0


def eta_large_point(tau: float) -> tuple[complex, float, float]:
    """Map the Gaussian variable tau to (w, cosh(theta/3), cosh(theta/2)) on the eta > 1 path.

    The path is ``u^2 - v^2/3 = 1`` in ``w = u + i v``.
    """
    theta = 2.0 * math.asinh(0.5 * tau)
    c3 = math.cosh(theta / 3.0)
    s3 = math.sinh(theta / 3.0)
    return complex(c3, SQRT3 * s3), c3, math.cosh(0.5 * theta)


def eval_eta_large(f, eta: float, cfg: QuadratureConfig | None = None, *, drop_exp: bool = False) -> QuadratureResult:
    """F(eta) for eta > 1 along the steepest descent path through sqrt(eta).

    ``F = exp(-xi)/(2 pi) sqrt(eta/3) int exp(-xi tau^2/2) h(tau) dtau``
    with ``xi = 2/3 eta^{3/2}``; the factor ``exp(-xi)`` stays outside the
    sum, and is left out altogether with ``drop_exp=True``.
    """
    f = _as_integrand(f)
    if not eta > 0.0:
        raise UnsupportedEta(f"eval_eta_large needs eta > 0, got {eta}")
    cfg = cfg or QuadratureConfig(h=DEFAULT_STEP["eta_large"])
    root = math.sqrt(eta)
    xi = 2.0 / 3.0 * eta * root

    def integrand(tau: float) -> complex:
        w, c3, c2 = eta_large_point(tau)
        g = f.eval(root * w)
        jac = complex(1.0, -w.imag / (3.0 * w.real)) * (c3 / c2)
        return math.exp(-0.5 * xi * tau * tau) * g * jac

    sym = Symmetry.HERMITIAN if f.real_on_real else Symmetry.NONE
    res = trapezoid_refine(LineIntegrand(integrand, sym), cfg)
    front = (1.0 if drop_exp else math.exp(-xi)) / (2.0 * math.pi) * math.sqrt(eta / 3.0)
    return res.scaled(front, Regime.ETA_LARGE.value)


def eta_neg_angle(sigma: float) -> float:
    """tau(sigma) on the branch of ``cosh(sigma) sin(tau) = 1`` with tau in (0, pi)."""
    if sigma == 0.0:
        return 0.5 * math.pi
    a = math.asin(1.0 / math.cosh(sigma))
    return math.pi - a if sigma > 0 else a


def eta_neg_point(sigma: float) -> tuple[complex, complex, float]:
    """(w, theta, tau) on the upper eta < -1 path, ``w = 2 sinh(theta/3)``."""
    tau = eta_neg_angle(sigma)
    theta = complex(sigma, tau)
    return 2.0 * cmath.sinh(theta / 3.0), theta, tau


def _eta_neg_upper(f: AnalyticIntegrand, eta: float, cfg: QuadratureConfig) -> QuadratureResult:
    beta = math.sqrt(-eta)
    xi = 2.0 / 3.0 * beta**3

    def integrand(sigma: float) -> complex:
        # exp(-xi tanh(s) sinh(s)) underflows long before cosh(theta/3) overflows
        decay = xi * math.tanh(sigma) * math.sinh(sigma)
        if decay > 745.0:
            return 0j
        w, theta, tau = eta_neg_point(sigma)
        g = f.eval(beta * w)
        return math.exp(-decay) * g * cmath.cosh(theta / 3.0) * complex(1.0, math.sin(tau))

    res = trapezoid_refine(LineIntegrand(integrand), cfg)
    front = beta / (3j * math.pi) * cmath.exp(1j * xi)
    return res.scaled(front)


def eval_eta_neg(f, eta: float, cfg: QuadratureConfig | None = None, *, split: bool = False):
    """F(eta) for eta < -1 as the sum of the two steepest descent paths through ``+-i sqrt(-eta)``.

    For real-on-real amplitudes ``F = 2 Re F+``; otherwise the lower path is
    obtained as ``conj(F+)`` of the reflected amplitude. With ``split=True``
    returns ``(F+, F-)`` instead.
    """
    f = _as_integrand(f)
    if not eta < 0.0:
        raise UnsupportedEta(f"eval_eta_neg needs eta < 0, got {eta}")
    cfg = cfg or QuadratureConfig(h=DEFAULT_STEP["eta_neg"])
    upper = _eta_neg_upper(f, eta, cfg)
    if split:
        lower = _eta_neg_upper(f.reflected(), eta, cfg)
        lower.value = lower.value.conjugate()
        return upper, lower
    if f.real_on_real:
        value = complex(2.0 * upper.value.real, 0.0)
        return QuadratureResult(
            value,
            upper.terms,
            upper.h_used,
            upper.est_error,
            Regime.ETA_NEG.value,
            upper.k_pos,
            upper.k_neg,
            upper.halvings,
            2.0 * upper.magnitude,
        )
    lower = _eta_neg_upper(f.reflected(), eta, cfg)
    return QuadratureResult(
        upper.value + lower.value.conjugate(),
        upper.terms + lower.terms,
        upper.h_used,
        max(upper.est_error, lower.est_error),
        Regime.ETA_NEG.value,
        upper.k_pos,
        upper.k_neg,
        upper.halvings,
        upper.magnitude + lower.magnitude,
    )


def eta_mid_point(theta: float) -> tuple[complex, complex]:
    """(t, dt/dtheta) on the fixed path ``u = 1 + cosh(theta), v = sqrt(3) sinh(theta)``."""
    ch, sh = math.cosh(theta), math.sinh(theta)
    return complex(1.0 + ch, SQRT3 * sh), complex(sh, SQRT3 * ch)


def eval_eta_mid(f, eta: complex, cfg: QuadratureConfig | None = None) -> QuadratureResult:
    """F(eta) for |eta| <= 1 (real or complex) along the eta-independent path through t = 2."""
    f = _as_integrand(f)
    eta = complex(eta)
    cfg = cfg or QuadratureConfig(h=DEFAULT_STEP["eta_mid"])

    def integrand(theta: float) -> complex:
        ch, sh = math.cosh(theta), math.sinh(theta)
        # phase(t) = 8/3 - 2 eta - p + i r
        p = (ch - 1.0) * (8.0 * ch * ch + 14.0 * ch + 2.0 + 3.0 * eta) / 3.0
        if p.real > 745.0:
            return 0j
        r = SQRT3 * sh * (2.0 * ch + 2.0 - eta)
        t, dt = eta_mid_point(theta)
        return cmath.exp(-p + 1j * r) * f.eval(t) * dt

    front = cmath.exp(8.0 / 3.0 - 2.0 * eta) / (2j * math.pi)
    if f.real_on_real and eta.imag == 0.0:
        # integrand(-theta) = -conj(integrand(theta)); rotating by -i makes it Hermitian
        res = trapezoid_refine(LineIntegrand(lambda th: -1j * integrand(th), Symmetry.HERMITIAN), cfg)
        return res.scaled(front * 1j, Regime.ETA_MID.value)
    res = trapezoid_refine(LineIntegrand(integrand), cfg)
    return res.scaled(front, Regime.ETA_MID.value)


def airy_ai(eta: complex, cfg: QuadratureConfig | None = None) -> complex:
    """Ai(eta) as the Airy-type integral with f = 1."""
    value = eval_airy_type(ONE, eta, cfg).value
    if complex(eta).imag == 0.0:
        return complex(value.real, 0.0)
    return value
