"""Error against step size for F(eta) with f = cos 4t, one line per regime.

The reference is Re Ai(eta + 4i) from the Maclaurin series, since
cos 4t = (e^{4it} + e^{-4it}) / 2 shifts eta by -+4i. The error should
fall like exp(-c / h^2) until it reaches rounding level.
"""

import argparse
import cmath

import numpy as np

from airyquad.airy import AnalyticIntegrand, eval_eta_large, eval_eta_mid, eval_eta_neg
from airyquad.oracles import airy_series
from airyquad.quadrature import QuadratureConfig

COS4 = AnalyticIntegrand(lambda t: cmath.cos(4.0 * t), real_on_real=True, check=False)
RUNS = [("eta_neg", -3.0, eval_eta_neg), ("eta_mid", 1.0, eval_eta_mid), ("eta_large", 3.0, eval_eta_large)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--steps", type=float, nargs="+", default=list(np.geomspace(0.4, 0.03, 10)))
    args = p.parse_args()
    for name, eta, fn in RUNS:
        exact = airy_series(complex(eta, 4.0)).value.real
        print(f"\n{name}  eta={eta:+g}  F={exact:.16e}")
        print(f"{'h':>8}  {'terms':>6}  {'rel error':>10}")
        for h in args.steps:
            res = fn(COS4, eta, QuadratureConfig(h=float(h), max_halvings=0))
            err = abs(res.value.real - exact) / abs(exact)
            print(f"{h:8.4f}  {res.terms:6d}  {err:10.2e}")


if __name__ == "__main__":
    main()
