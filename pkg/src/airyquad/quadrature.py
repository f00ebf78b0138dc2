"""Trapezoidal rules on the real line and on finite intervals.

The line rule sums ``h * sum_k g(k h)`` outward from ``k = 0`` and stops each
tail independently once terms stay negligible. Halving the step reuses every
node already evaluated, so a refinement sequence costs no more than the final
level.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from typing import Callable

from .errors import DegreeOutOfRange, InvalidInterval, NonConvergence

MAX_TERMS = 10**6
ROUNDING_FLOOR = 1e-15


class Symmetry(enum.Enum):
    NONE = "none"
    EVEN = "even"
    # g(-t) = conj(g(t)): real part even, imaginary part odd
    HERMITIAN = "hermitian"


@dataclass(frozen=True)
class QuadratureConfig:
    h: float = 0.25
    trunc_ratio: float = 1e-16
    tol: float = 1e-13
    max_halvings: int = 4
    min_terms: int = 3

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"step must be positive, got {self.h}")
        if not 0 < self.trunc_ratio < 1:
            raise ValueError(f"trunc_ratio must lie in (0, 1), got {self.trunc_ratio}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_halvings < 0:
            raise ValueError("max_halvings must be >= 0")
        if self.min_terms < 1:
            raise ValueError("min_terms must be >= 1")

    def with_step(self, h: float) -> "QuadratureConfig":
        return QuadratureConfig(h, self.trunc_ratio, self.tol, self.max_halvings, self.min_terms)

    def fixed(self, h: float | None = None) -> "QuadratureConfig":
        """Same settings at a single step, no halving."""
        return QuadratureConfig(h or self.h, self.trunc_ratio, self.tol, 0, self.min_terms)


@dataclass
class QuadratureResult:
    value: complex
    terms: int
    h_used: float
    est_error: float
    tag: str = ""
    k_pos: int = 0
    k_neg: int = 0
    halvings: int = 0
    magnitude: float = 0.0  # h * sum |g(kh)|, sets the rounding floor of the sum

    def scaled(self, factor: complex, tag: str | None = None) -> "QuadratureResult":
        return QuadratureResult(
            self.value * factor,
            self.terms,
            self.h_used,
            self.est_error,
            tag if tag is not None else self.tag,
            self.k_pos,
            self.k_neg,
            self.halvings,
            self.magnitude * abs(factor),
        )


@dataclass
class LineIntegrand:
    eval: Callable[[float], complex]
    symmetry: Symmetry = Symmetry.NONE


def _as_line(g) -> LineIntegrand:
    return g if isinstance(g, LineIntegrand) else LineIntegrand(g)


class _Neumaier:
    """Compensated complex sum (real and imaginary parts separately)."""

    __slots__ = ("re", "im", "c_re", "c_im")

    def __init__(self):
        self.re = self.im = self.c_re = self.c_im = 0.0

    @staticmethod
    def _step(s: float, c: float, x: float) -> tuple[float, float]:
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        return t, c

    def add(self, v: complex) -> None:
        self.re, self.c_re = self._step(self.re, self.c_re, v.real)
        self.im, self.c_im = self._step(self.im, self.c_im, v.imag)

    @property
    def value(self) -> complex:
        return complex(self.re + self.c_re, self.im + self.c_im)


def trapezoid_line(g, cfg: QuadratureConfig, _cache: dict | None = None) -> QuadratureResult:
    """Infinite trapezoidal sum ``h * sum_k g(k h)`` with tail truncation.

    A tail stops after ``cfg.min_terms`` consecutive terms with
    ``|term| < trunc_ratio * scale`` where ``scale`` is the larger of the
    partial sum and the largest term seen (the latter keeps odd integrands,
    whose partial sums vanish, from running forever). The sum is
    compensated, so symmetric and plain summation agree to rounding.
    """
    g = _as_line(g)
    h = cfg.h
    cache = _cache if _cache is not None else {}
    evals = 0

    def at(x: float) -> complex:
        nonlocal evals
        if x in cache:
            return cache[x]
        v = complex(g.eval(x))
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise NonConvergence(f"integrand not finite at t={x!r}")
        cache[x] = v
        evals += 1
        return v

    sym = g.symmetry
    g0 = at(0.0)
    acc = _Neumaier()
    acc.add(complex(g0.real, 0.0) if sym is Symmetry.HERMITIAN else g0)
    l1 = abs(g0)
    peak = abs(g0)
    two_sided = sym is Symmetry.NONE
    run_pos = run_neg = 0
    k_pos = k_neg = 0
    done_pos = False
    done_neg = not two_sided
    k = 0
    while not (done_pos and done_neg):
        k += 1
        if k > MAX_TERMS:
            raise NonConvergence(f"trapezoid sum exceeded {MAX_TERMS} terms; integrand does not decay")
        if not done_pos:
            v = at(k * h)
            if sym is Symmetry.EVEN:
                term = 2.0 * v
            elif sym is Symmetry.HERMITIAN:
                term = complex(2.0 * v.real, 0.0)
            else:
                term = v
            acc.add(term)
            l1 += abs(term)
            peak = max(peak, abs(term))
            if abs(term) < cfg.trunc_ratio * max(abs(acc.value), peak):
                run_pos += 1
                if run_pos == 1:
                    k_pos = k
                if run_pos >= cfg.min_terms:
                    done_pos = True
            else:
                run_pos = 0
        if not done_neg:
            v = at(-k * h)
            acc.add(v)
            l1 += abs(v)
            peak = max(peak, abs(v))
            if abs(v) < cfg.trunc_ratio * max(abs(acc.value), peak):
                run_neg += 1
                if run_neg == 1:
                    k_neg = k
                if run_neg >= cfg.min_terms:
                    done_neg = True
            else:
                run_neg = 0
    if not two_sided:
        k_neg = k_pos
    return QuadratureResult(h * acc.value, evals, h, math.inf, "line", k_pos, k_neg, 0, h * l1)


def trapezoid_refine(g, cfg: QuadratureConfig) -> QuadratureResult:
    """Halve the step until successive sums agree to ``cfg.tol``.

    Every level shares one node cache, so the final result is identical
    to a fresh ``trapezoid_line`` at the final step. A change below
    ``ROUNDING_FLOOR`` times ``h sum |g|`` also counts as converged, which
    matters for integrals that cancel to (nearly) zero. Raises NonConvergence
    (with ``.result`` set) when ``max_halvings`` is exhausted.
    """
    g = _as_line(g)
    cache: dict = {}
    h = cfg.h
    prev = trapezoid_line(g, cfg.with_step(h), cache)
    total_evals = prev.terms
    if cfg.max_halvings == 0:
        return prev
    diff = math.inf
    for level in range(1, cfg.max_halvings + 1):
        h *= 0.5
        cur = trapezoid_line(g, cfg.with_step(h), cache)
        total_evals += cur.terms
        scale = abs(cur.value)
        change = abs(cur.value - prev.value)
        diff = change / scale if scale > 0 else change
        cur.terms = total_evals
        cur.est_error = diff
        cur.halvings = level
        prev = cur
        # a change at the rounding level of the sum itself is as converged as it gets
        if diff < cfg.tol or change <= ROUNDING_FLOOR * cur.magnitude:
            return cur
    raise NonConvergence(
        f"trapezoid refinement did not reach tol={cfg.tol:g} after {cfg.max_halvings} halvings "
        f"(last relative change {diff:.3g})",
        result=prev,
    )


def trapezoid_periodiclike(g: Callable[[float], complex], a: float, b: float, n: int) -> complex:
    """Midpoint-offset trapezoid sum on ``[a, b]`` with ``n`` nodes.

    Accurate to machine precision when ``g`` and its derivatives vanish (or
    match) at both ends; the offset keeps nodes off the endpoints where
    contour parametrizations typically blow up.
    """
    if not a < b:
        raise InvalidInterval(f"need a < b, got [{a}, {b}]")
    if n < 2:
        raise ValueError("n must be >= 2")
    step = (b - a) / n
    total = 0.0
    for j in range(n):
        total += g(a + (j + 0.5) * step)
    return step * total


# --- Gauss-Hermite ----------------------------------------------------------

_GH_CACHE: dict[int, tuple[tuple[float, ...], tuple[float, ...]]] = {}
_GH_LOCK = threading.Lock()
_PI_M14 = math.pi**-0.25


def _hermite_orthonormal(n: int, x: float) -> tuple[float, float]:
    """(p_n(x), p_{n-1}(x)) for polynomials orthonormal under exp(-x^2)."""
    p_prev, p = 0.0, _PI_M14
    for j in range(1, n + 1):
        p_prev, p = p, x * math.sqrt(2.0 / j) * p - math.sqrt((j - 1) / j) * p_prev
    return p, p_prev


def _gh_rule(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    upper = math.sqrt(2 * n + 1) + 1.0
    m = 40 * n
    # odd degree: the origin is an exact root, so the scan starts just past it
    roots = [0.0] if n % 2 else []
    prev_x = 0.5 * upper / m
    prev_v = _hermite_orthonormal(n, prev_x)[0]
    grid = [upper * i / m for i in range(1, m + 1)]
    for x in grid:
        v = _hermite_orthonormal(n, x)[0]
        if prev_v == 0.0 or v * prev_v < 0:
            lo, hi, flo = prev_x, x, prev_v
            for _ in range(20):
                mid = 0.5 * (lo + hi)
                fm = _hermite_orthonormal(n, mid)[0]
                if fm * flo <= 0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            r = 0.5 * (lo + hi)
            for _ in range(50):
                p, pm1 = _hermite_orthonormal(n, r)
                dr = p / (math.sqrt(2 * n) * pm1)
                r -= dr
                if abs(dr) <= 1e-16 * max(1.0, abs(r)):
                    break
            roots.append(r)
        prev_x, prev_v = x, v
    expected = (n + 1) // 2
    if len(roots) != expected:
        raise RuntimeError(f"Gauss-Hermite root search found {len(roots)} of {expected} roots")
    nodes, weights = [], []
    for r in roots:
        _, pm1 = _hermite_orthonormal(n, r)
        w = 1.0 / (n * pm1 * pm1)
        nodes.append(r)
        weights.append(w)
        if r != 0.0:
            nodes.append(-r)
            weights.append(w)
    order = sorted(range(len(nodes)), key=nodes.__getitem__)
    return tuple(nodes[i] for i in order), tuple(weights[i] for i in order)


def gauss_hermite_rule(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    if not 1 <= n <= 128:
        raise DegreeOutOfRange(f"Gauss-Hermite degree must be in [1, 128], got {n}")
    rule = _GH_CACHE.get(n)
    if rule is None:
        with _GH_LOCK:
            rule = _GH_CACHE.get(n)
            if rule is None:
                rule = _gh_rule(n)
                _GH_CACHE[n] = rule
    return rule


def gauss_hermite(g: Callable[[float], complex], n: int) -> complex:
    """Approximate ``int exp(-t^2) g(t) dt`` with the n-point Gauss-Hermite rule."""
    nodes, weights = gauss_hermite_rule(n)
    return sum(w * g(x) for x, w in zip(nodes, weights))


def estimate_step_error(h: float, lam: float, a: float | None = None) -> float:
    """Heuristic trapezoid error for ``exp(-lam t^2) f(t)`` at step ``h``.

    ``a`` is the half-width of the strip of analyticity of ``f``; at or beyond
    the optimum ``pi / (lam h)`` the estimate is ``exp(-pi^2 / (lam h^2))``.
    """
    if h <= 0 or lam <= 0 or (a is not None and a <= 0):
        raise ValueError("all arguments must be positive")
    a_opt = math.pi / (lam * h)
    if a is None or a >= a_opt:
        return math.exp(-math.pi**2 / (lam * h * h))
    return math.exp(-2.0 * math.pi * a / h + lam * a * a)
