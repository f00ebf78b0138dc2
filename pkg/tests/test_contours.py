import math

import pytest

from airyquad.contours import KINDS, PARAMETER, export
from airyquad.errors import DomainError

VALUES = {"eta-pos": 2.0, "eta-zero": 0.4, "eta-neg": -3.0, "bessel-mono": 0.8, "bessel-osc": 1.5, "shifted": 0.995}


@pytest.mark.parametrize("kind", KINDS)
def test_shape(kind):
    header, rows = export(kind, VALUES[kind], 64)
    assert len(rows) == 64
    assert all(len(r) == len(header) for r in rows)
    assert all(math.isfinite(v) for r in rows for v in r)
    # parameter column increases strictly
    first = [r[0] for r in rows]
    assert first == sorted(first) and len(set(first)) == 64


def test_eta_pos_on_hyperbola():
    header, rows = export("eta-pos", 3.0, 100)
    iu, iv = header.index("u"), header.index("v")
    for r in rows:
        assert abs(r[iu] ** 2 - r[iv] ** 2 / 3.0 - 1.0) <= 1e-13 * max(1.0, r[iu] ** 2)


def test_eta_zero_on_hyperbola():
    _, rows = export("eta-zero", 0.0, 50)
    for _, x, y in rows:
        assert abs((x - 1.0) ** 2 - y * y / 3.0 - 1.0) <= 1e-12 * max(1.0, y * y)


def test_eta_neg_midpoint():
    # sigma = 0 gives w = 2 sinh(i pi / 6) = i, so t = i sqrt(-eta)
    _, rows = export("eta-neg", -4.0, 201)
    sigma, _, x, y = rows[100]
    assert abs(sigma) <= 1e-15
    assert abs(complex(x, y) - 2j) <= 1e-14


@pytest.mark.parametrize(
    "kind, value",
    [("eta-pos", -1.0), ("eta-zero", 2.0), ("eta-neg", 1.0), ("nope", 1.0)],
)
def test_bad_input(kind, value):
    with pytest.raises(DomainError):
        export(kind, value, 10)


def test_parameter_map():
    assert set(PARAMETER) == set(KINDS)
    assert set(PARAMETER.values()) == {"eta", "z"}
    with pytest.raises(DomainError):
        export("eta-neg", -1.0, 1)
