import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airyquad.airy import (
    ONE,
    AnalyticIntegrand,
    Regime,
    airy_ai,
    eta_large_point,
    eta_neg_point,
    eval_airy_type,
    eval_airy_type_log,
    eval_eta_large,
    eval_eta_mid,
    eval_eta_neg,
    regime_for,
)
from airyquad.errors import UnsupportedEta
from airyquad.oracles import airy_series, bessel_j_series, k13_integral
from airyquad.quadrature import QuadratureConfig

COS = AnalyticIntegrand(cmath.cos, real_on_real=True)
SQUARE = AnalyticIntegrand(lambda t: t * t, real_on_real=True)


def rel(a, b):
    return abs(a - b) / abs(b)


def ai(x):
    return airy_series(x).value


@pytest.mark.parametrize(
    "eta, regime",
    [(2.0, Regime.ETA_LARGE), (1.0, Regime.ETA_MID), (-1.0, Regime.ETA_MID), (-1.5, Regime.ETA_NEG), (0.5j, Regime.ETA_MID)],
)
def test_regime_dispatch(eta, regime):
    assert regime_for(eta) is regime


def test_complex_eta_outside_disk():
    with pytest.raises(UnsupportedEta):
        eval_airy_type(ONE, 1.0 + 1.0j)


@pytest.mark.parametrize("eta", [float(k) for k in range(-6, 7)])
def test_airy_function(eta):
    assert rel(airy_ai(eta).real, ai(eta).real) <= 1e-11


@pytest.mark.parametrize(
    "eta, expected", [(0.0, 0.35502805388781724), (-1.0, 0.53556088329235211), (1.0, 0.13529241631288141)]
)
def test_airy_known_values(eta, expected):
    assert rel(airy_ai(eta).real, expected) <= 1e-13


def test_airy_large_argument():
    # beyond the series oracle; compare with Ai(10) from the K_{1/3} integral
    xi = 2.0 / 3.0 * 10.0**1.5
    ref = math.sqrt(10.0 / 3.0) / math.pi * k13_integral(xi).real
    assert rel(airy_ai(10.0).real, ref) <= 1e-11
    assert 1.1e-10 < airy_ai(10.0).real < 1.11e-10


def test_eta_large_is_k_bessel():
    eta = 2.0
    xi = 2.0 / 3.0 * eta**1.5
    ref = math.sqrt(eta / 3.0) / math.pi * k13_integral(xi).real
    assert rel(eval_eta_large(ONE, eta).value.real, ref) <= 1e-12


def test_eta_neg_is_j_bessel():
    eta = -4.0
    beta = 2.0
    xi = 16.0 / 3.0
    ref = beta / 3.0 * (bessel_j_series(-1.0 / 3.0, xi).real + bessel_j_series(1.0 / 3.0, xi).real)
    assert rel(eval_eta_neg(ONE, eta).value.real, ref) <= 1e-12


@pytest.mark.parametrize("k", range(17))
def test_unit_circle(k):
    eta = cmath.exp(1j * math.pi * k / 16)
    got = eval_eta_mid(ONE, eta, QuadratureConfig(h=0.06, max_halvings=0)).value
    assert abs(got - ai(eta)) <= 1e-13


def test_cos_table_row_eta_neg():
    res = eval_eta_neg(COS, -1.0, QuadratureConfig(h=0.2, max_halvings=0))
    ref = eval_eta_neg(COS, -1.0, QuadratureConfig(h=0.05, max_halvings=0))
    assert rel(res.value.real, ref.value.real) <= 1e-13
    assert res.k_pos + res.k_neg + 1 == 49


def test_cos_eta_large_six():
    res = eval_eta_large(COS, 6.0, QuadratureConfig(h=0.3, max_halvings=0))
    ref = eval_eta_large(COS, 6.0, QuadratureConfig(h=0.075, max_halvings=0))
    assert rel(res.value.real, ref.value.real) <= 1e-8
    assert abs(res.k_pos - 10) <= 1


def test_cos_three_refined():
    res = eval_airy_type(COS, 3.0)
    ref = eval_eta_large(COS, 3.0, QuadratureConfig(h=0.05, max_halvings=0))
    assert rel(res.value.real, ref.value.real) <= 1e-12


@pytest.mark.parametrize("f", [ONE, COS], ids=["one", "cos"])
@pytest.mark.parametrize("eta", [1.0, -1.0])
def test_regime_overlap(f, eta):
    mid = eval_eta_mid(f, eta).value.real
    other = eval_eta_large(f, eta).value.real if eta > 0 else eval_eta_neg(f, eta).value.real
    assert rel(other, mid) <= 1e-11


@pytest.mark.parametrize("eta", [-4.0, -1.5, 0.3, 2.5, 5.0])
def test_real_output_for_real_integrand(eta):
    f = AnalyticIntegrand(lambda t: cmath.cos(t) + t * t, real_on_real=True, check=False)
    g = AnalyticIntegrand(f.eval)  # same function, symmetry not declared
    v = eval_airy_type(g, eta).value
    assert abs(v.imag) <= 1e-12 * abs(v)
    assert rel(eval_airy_type(f, eta).value.real, v.real) <= 1e-12


@pytest.mark.parametrize("eta", [-1.5, -3.0, -5.5])
def test_schwarz_consistency(eta):
    upper, lower = eval_eta_neg(COS, eta, split=True)
    assert rel(lower.value, upper.value.conjugate()) <= 1e-13


coef = st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False).filter(lambda c: abs(c) > 0.1)


@given(coef, coef, st.sampled_from([-3.5, -1.2, 0.0, 0.7, 1.8, 4.0]))
@settings(max_examples=25, deadline=None)
def test_linearity(a, b, eta):
    fa, fb = COS, SQUARE
    combo = AnalyticIntegrand(lambda t: a * fa(t) + b * fb(t))
    lhs = eval_airy_type(combo, eta).value
    rhs = a * eval_airy_type(fa, eta).value + b * eval_airy_type(fb, eta).value
    assert abs(lhs - rhs) <= 1e-12 * (abs(a * eval_airy_type(fa, eta).value) + abs(b * eval_airy_type(fb, eta).value))


@given(st.floats(-6.0, 6.0))
@settings(max_examples=40, deadline=None)
def test_neg_contour_identity(sigma):
    w, theta, tau = eta_neg_point(sigma)
    # tau near pi carries an absolute rounding of about ulp(pi), which cosh(sigma) amplifies
    assert abs(math.cosh(sigma) * math.sin(tau) - 1.0) <= 1e-14 + 5e-16 * math.cosh(sigma)
    assert 0.0 < tau < math.pi


@given(st.floats(-20.0, 20.0))
@settings(max_examples=40, deadline=None)
def test_large_contour_identity(tau):
    w, _, _ = eta_large_point(tau)
    u, v = w.real, w.imag
    assert abs(u * u - v * v / 3.0 - 1.0) <= 1e-14 * max(1.0, u * u)


def test_real_on_real_spot_check():
    with pytest.raises(ValueError):
        AnalyticIntegrand(lambda t: 1j * t, real_on_real=True)


def test_log_form_matches_plain():
    res, scale = eval_airy_type_log(COS, 4.0)
    assert rel(res.value.real * math.exp(scale), eval_airy_type(COS, 4.0).value.real) <= 1e-14


def test_default_step_shrinks_for_large_eta():
    # |eta| = 60 needs a finer start than 0.2; the default adapts
    res = eval_airy_type(ONE, -60.0)
    assert res.h_used < 0.2
    assert res.est_error < 1e-13
