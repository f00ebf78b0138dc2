"""Sampled integration contours, as tables of points for plotting or checking.

Each exporter returns ``(header, rows)`` with rows of floats.
"""

from __future__ import annotations

import math

from .airy import eta_large_point, eta_mid_point, eta_neg_point
from .bessel import _oscillatory_point, monotonic_sigma, shifted_offset, shifted_point
from .errors import DomainError

KINDS = ("eta-pos", "eta-zero", "eta-neg", "bessel-mono", "bessel-osc", "shifted")
LOG_EPS = 36.8  # exp(-36.8) ~ 1e-16


def _grid(a: float, b: float, n: int) -> list[float]:
    """n midpoints of [a, b] (endpoints are singular for the Bessel paths)."""
    step = (b - a) / n
    return [a + (k + 0.5) * step for k in range(n)]


def eta_pos(eta: float, samples: int) -> tuple[list[str], list[list[float]]]:
    if not eta > 0:
        raise DomainError(f"eta-pos contour needs eta > 0, got {eta}")
    xi = 2.0 / 3.0 * eta**1.5
    span = min(math.sqrt(2.0 * LOG_EPS / xi), 40.0)
    root = math.sqrt(eta)
    rows = []
    for tau in _grid(-span, span, samples):
        w, _, _ = eta_large_point(tau)
        rows.append([tau, w.real, w.imag, root * w.real, root * w.imag])
    return ["tau", "u", "v", "re_t", "im_t"], rows


def eta_zero(eta: float, samples: int) -> tuple[list[str], list[list[float]]]:
    if abs(eta) > 1.0:
        raise DomainError(f"eta-zero contour is used for |eta| <= 1, got {eta}")
    rows = []
    for theta in _grid(-3.0, 3.0, samples):
        t, _ = eta_mid_point(theta)
        rows.append([theta, t.real, t.imag])
    return ["theta", "re_t", "im_t"], rows


def eta_neg(eta: float, samples: int) -> tuple[list[str], list[list[float]]]:
    """Upper path; the lower one is its mirror image in the real axis."""
    if not eta < 0:
        raise DomainError(f"eta-neg contour needs eta < 0, got {eta}")
    beta = math.sqrt(-eta)
    xi = 2.0 / 3.0 * beta**3
    span = math.asinh(math.sqrt(LOG_EPS / xi)) + 1.0
    rows = []
    for sigma in _grid(-span, span, samples):
        w, _, tau = eta_neg_point(sigma)
        rows.append([sigma, tau, beta * w.real, beta * w.imag])
    return ["sigma", "tau", "re_t", "im_t"], rows


def bessel_mono(z: float, samples: int) -> tuple[list[str], list[list[float]]]:
    if not 0 < z <= 1:
        raise DomainError(f"bessel-mono contour needs 0 < z <= 1, got {z}")
    rows = [[tau, monotonic_sigma(tau, z)] for tau in _grid(-math.pi, math.pi, samples)]
    return ["tau", "sigma"], rows


def bessel_osc(z: float, samples: int) -> tuple[list[str], list[list[float]]]:
    if not z > 1:
        raise DomainError(f"bessel-osc contour needs z > 1, got {z}")
    a = math.sqrt((z - 1.0) * (z + 1.0))
    s_plus = math.atan(a)
    rows = []
    for tau in _grid(0.0, math.pi, samples):
        sigma, dsig, _ = _oscillatory_point(tau, z, a, s_plus)
        rows.append([tau, sigma, dsig])
    return ["tau", "sigma", "dsigma_dtau"], rows


def shifted(z: float, samples: int) -> tuple[list[str], list[list[float]]]:
    if not z > 0:
        raise DomainError(f"shifted contour needs z > 0, got {z}")
    c = shifted_offset(z)
    rows = []
    for tau in _grid(-math.pi, math.pi, samples):
        sigma, dsig = shifted_point(tau, z, c)
        rows.append([tau, sigma, dsig])
    return ["tau", "sigma", "dsigma_dtau"], rows


EXPORTERS = {
    "eta-pos": eta_pos,
    "eta-zero": eta_zero,
    "eta-neg": eta_neg,
    "bessel-mono": bessel_mono,
    "bessel-osc": bessel_osc,
    "shifted": shifted,
}
# which CLI flag carries the parameter
PARAMETER = {k: ("eta" if k.startswith("eta") else "z") for k in KINDS}


def export(kind: str, value: float, samples: int = 200) -> tuple[list[str], list[list[float]]]:
    if kind not in EXPORTERS:
        raise DomainError(f"unknown contour kind {kind!r}")
    if samples < 2:
        raise DomainError("need at least 2 samples")
    return EXPORTERS[kind](value, samples)
