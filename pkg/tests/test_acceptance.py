"""Acceptance criteria 1 to 10, one test each.

Every test records a single PASS/FAIL line through the ``report`` fixture;
the lines are repeated in the pytest terminal summary.
"""

import cmath
import math
import random

import mpmath
import numpy as np

from airyquad.airy import ONE, AnalyticIntegrand, airy_ai, eta_large_point, eta_mid_point, eta_neg_point, eval_eta_mid
from airyquad.bessel import bessel_j, bessel_jx, j_airy_type, j_direct_monotonic
from airyquad.hermite import hermite_eval, hermite_recurrence_oracle
from airyquad.oracles import airy_series, bessel_j_series
from airyquad.quadrature import QuadratureConfig
from airyquad.tables import table1, table2, table3, table4, table5
from airyquad.transform import (
    BesselMap,
    HermiteMap,
    bessel_geometry_from_zeta,
    bessel_z_from_zeta,
    bessel_zeta,
    hermite_geometry,
)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_criterion_01_table1(report):
    worst, best = 0.0, math.inf
    for row in table1():
        for col in ("gh_error", "trap_error", "trap_half_error"):
            ours, pub = row[col], row["published_" + col]
            ratio = ours / pub
            # entries at the 1e-10 level and above are truncation errors and must match both ways;
            # smaller ones are rounding noise, where being more accurate is allowed
            ok = ratio <= 50.0 and (pub < 1e-10 or ratio >= 1.0 / 50.0)
            worst, best = max(worst, ratio), min(best, ratio)
            if not ok:
                report(1, False, f"{row['case']} {col}: {ours:.3g} vs published {pub:.3g}")
    report(1, True, f"9 entries, ours/published in [{best:.2g}, {worst:.2g}]")


def test_criterion_02_table2(report):
    worst, worst_k = 0.0, 0
    for row in table2():
        bound = 100.0 * max(row["published_delta"], 1e-16)
        worst = max(worst, row["delta"] / bound)
        worst_k = max(worst_k, abs(row["k_m"] - row["published_k_m"]))
    report(2, worst <= 1.0 and worst_k <= 5, f"delta/(100 x published) max {worst:.3g}; k_m off by at most {worst_k}")


def test_criterion_03_airy_identity(report):
    real_err = max(rel(airy_ai(float(e)).real, airy_series(float(e)).real) for e in np.linspace(-6.0, 6.0, 25))
    cfg = QuadratureConfig(h=0.06, max_halvings=0)
    circle_err = 0.0
    for k in range(17):
        eta = cmath.exp(1j * math.pi * k / 16)
        circle_err = max(circle_err, abs(eval_eta_mid(ONE, eta, cfg).value - airy_series(eta).value))
    report(
        3,
        real_err <= 1e-11 and circle_err <= 1e-13,
        f"real axis rel {real_err:.2e} (<=1e-11), unit circle abs {circle_err:.2e} (<=1e-13)",
    )


def test_criterion_04_table3(report):
    rows = {r["x"]: r for r in table3()}
    err = max(rows[x]["published_error"] for x in (91.0, 93.0, 95.0, 97.0))
    # the x = 99 recurrence needs J_99(99), at eta = 0 for the monotonic path
    partner = bessel_jx(99.0, 99.0, "monotonic")
    detected = j_direct_monotonic(99.0, 1.0).degraded and partner.fallback
    partner_err = rel(partner.value, bessel_j_series(99.0, 99.0).real)
    row99 = rows[99.0]
    ok = err <= 1e-11 and detected and partner_err <= 1e-10 and row99["rec_error"] <= 1e-10 and row99["oracle_error"] <= 1e-10
    report(
        4,
        ok,
        f"x=91..97 max rel {err:.2e}; J_99(99) degraded={detected}, fallback rel {partner_err:.2e}; "
        f"x=99 rec {row99['rec_error']:.2e}",
    )


def test_criterion_05_table4(report):
    rows = table4()
    err = max(r["published_error"] for r in rows)
    rec = max(r["rec_error"] for r in rows)
    report(5, err <= 1e-11 and rec <= 1e-10, f"max rel {err:.2e} (<=1e-11), recurrence {rec:.2e} (<=1e-10)")


def _z_reference(zeta: float) -> mpmath.mpf:
    """1 - z for z < 1 at the given zeta, in 50-digit arithmetic."""
    with mpmath.workdps(50):
        target = mpmath.mpf(2) / 3 * mpmath.mpf(zeta) ** mpmath.mpf(1.5)

        def rho(w):
            z = 1 - w
            s = mpmath.sqrt(1 - z * z)
            return mpmath.log((1 + s) / z) - s - target

        w0 = mpmath.mpf(zeta) / mpmath.cbrt(2)
        return mpmath.findroot(rho, w0)


def test_criterion_06_table5(report):
    rows = table5()
    err = max(r["published_error"] for r in rows)
    rec = max(r["rec_error"] for r in rows)
    last = rows[-1]
    z_err = float(abs(mpmath.mpf(last["one_minus_z"]) - _z_reference(last["zeta"])))
    ok = err <= 1e-11 and rec <= 1e-10 and z_err <= 1e-15
    report(6, ok, f"max rel {err:.2e}, recurrence {rec:.2e}, 1-z at k=10 off by {z_err:.1e}")


def test_criterion_07_cross_method(report):
    worst = 0.0
    for nu in (10.0, 100.0, 1000.0):
        for lo, hi, method in ((1.0, 3.0, "monotonic"), (-3.0, -1.0, "oscillatory"), (-1.0, 1.0, "shifted")):
            for eta in np.linspace(lo, hi, 7):
                geom = bessel_geometry_from_zeta(float(eta) * nu ** (-2.0 / 3.0))
                airy = j_airy_type(nu, geom=geom)
                direct = bessel_j(nu, geom.z, method, one_minus_z=geom.one_minus_z).value
                worst = max(worst, rel(direct, airy))
    report(7, worst <= 1e-9, f"63 overlap points, max rel {worst:.2e} (<=1e-9)")


def _contour_r(scale, eta, p):
    """Point at path parameter p of the contour that evaluates F(eta), mapped back to r."""
    if eta > 1.0:
        w, _, _ = eta_large_point(p)
        return scale * math.sqrt(eta) * w
    if eta < -1.0:
        w, _, _ = eta_neg_point(p)
        return scale * math.sqrt(-eta) * w
    return scale * eta_mid_point(p)[0]


def test_criterion_08_transform(report):
    rng = random.Random(8)
    residual = roundtrip = ode = fd = 0.0
    for z in (0.5, 0.9, 0.99, 1.0, 1.01, 1.2, 2.5):
        geom = bessel_zeta(z)
        m = BesselMap(geom)
        for _ in range(100):
            r = _contour_r(100 ** (-1.0 / 3.0), geom.eta(100.0), rng.uniform(-2.5, 2.5))
            s = m.invert(r)
            lhs, rhs = z * cmath.sinh(s) - s, r**3 / 3 - geom.zeta * r
            residual = max(residual, abs(lhs - rhs) / (1 + abs(r) ** 3 + abs(cmath.sinh(s))))
            eps = 1e-5
            fd = max(fd, abs(m(r) - (m.invert(r + eps) - m.invert(r - eps)) / (2 * eps)))
    for xi in (0.2, 0.5, 0.95, 1.0, 1.05, 1.2, 3.0):
        geom = hermite_geometry(xi)
        m = HermiteMap(geom)
        nu = math.sqrt(81.0)
        for _ in range(100):
            r = _contour_r(nu ** (-2.0 / 3.0), geom.eta(nu), rng.uniform(-2.5, 2.5))
            u = m.solve(r)
            s = cmath.exp(u)
            lhs, rhs = 2 * xi * s - 0.5 * u - s * s, r**3 / 3 - geom.zeta * r + geom.A
            residual = max(residual, abs(lhs - rhs) / (1 + abs(r) ** 3 + abs(s) ** 2 + abs(u)))
            eps = 1e-5
            deriv = (m.invert(r + eps) - m.invert(r - eps)) / (2 * eps)
            fd = max(fd, abs(m(r) + cmath.exp(-0.5 * u) * deriv))
        step = 1e-5
        d = (hermite_geometry(xi + step).zeta - hermite_geometry(xi - step).zeta) / (2 * step)
        ode = max(ode, abs(geom.zeta * d * d - (xi * xi - 1.0)))
    for _ in range(200):
        zeta = rng.uniform(-3.0, 3.0)
        roundtrip = max(roundtrip, abs(bessel_zeta(bessel_z_from_zeta(zeta)).zeta - zeta))
    ok = residual <= 1e-12 and roundtrip <= 1e-12 and ode <= 1e-6 and fd <= 1e-7
    report(
        8,
        ok,
        f"residual {residual:.1e} (<=1e-12), round trip {roundtrip:.1e} (<=1e-12), "
        f"ODE {ode:.1e} (<=1e-6), FD {fd:.1e} (<=1e-7)",
    )


def test_criterion_09_hermite(report):
    worst = 0.0
    for n in (10, 25, 40, 60):
        for xi in (0.2, 0.6, 0.95, 1.0, 1.05, 1.5, 3.0):
            x = xi * math.sqrt(2 * n + 1)
            worst = max(worst, hermite_eval(n, x).rel_diff(hermite_recurrence_oracle(n, x)))
    report(9, worst <= 1e-8, f"28 grid points, max rel {worst:.2e} (<=1e-8)")


def test_criterion_10_error_decay(report):
    f = AnalyticIntegrand(lambda t: cmath.cos(4.0 * t), real_on_real=True, check=False)
    # cos 4t = (e^{4it} + e^{-4it}) / 2 shifts eta by -+4i
    exact = airy_series(1.0 + 4.0j).value.real
    errs = [rel(eval_eta_mid(f, 1.0, QuadratureConfig(h=h, max_halvings=0)).value.real, exact) for h in (0.1, 0.05)]
    ok = 1e-11 <= errs[0] <= 1e-5 and errs[1] <= 1e-12
    report(10, ok, f"h=0.1: {errs[0]:.2e} (in [1e-11, 1e-5]), h=0.05: {errs[1]:.2e} (<=1e-12)")
