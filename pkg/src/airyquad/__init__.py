"""Airy-type contour integrals by the trapezoidal rule, with Bessel and Hermite applications."""

from .airy import AnalyticIntegrand, Regime, airy_ai, eval_airy_type
from .bessel import BesselMethod, BesselValue, bessel_j, bessel_jx, recurrence_check, select_method
from .errors import (
    AiryQuadError,
    BranchError,
    DegreeOutOfRange,
    DomainError,
    InvalidInterval,
    NonConvergence,
    OutOfRange,
    ParseError,
    UnsupportedEta,
)
from .expr import IntegrandExpr, parse_integrand
from .hermite import ScaledReal, hermite_eval
from .quadrature import QuadratureConfig, QuadratureResult, Symmetry, gauss_hermite, trapezoid_line
from .transform import bessel_h, bessel_zeta, hermite_g, hermite_geometry

__all__ = [
    "AiryQuadError",
    "AnalyticIntegrand",
    "BesselMethod",
    "BesselValue",
    "BranchError",
    "DegreeOutOfRange",
    "DomainError",
    "IntegrandExpr",
    "InvalidInterval",
    "NonConvergence",
    "OutOfRange",
    "ParseError",
    "QuadratureConfig",
    "QuadratureResult",
    "Regime",
    "ScaledReal",
    "Symmetry",
    "UnsupportedEta",
    "airy_ai",
    "bessel_h",
    "bessel_j",
    "bessel_jx",
    "bessel_zeta",
    "eval_airy_type",
    "gauss_hermite",
    "hermite_eval",
    "hermite_g",
    "hermite_geometry",
    "parse_integrand",
    "recurrence_check",
    "select_method",
    "trapezoid_line",
]
__version__ = "0.1.0"
