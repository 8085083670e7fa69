"""Exotic series sum a_n E_n(y) x^n: exact numbers, special functions,
series/quadrature/closed-form evaluation and a verification harness."""

from .catalog import IdentitySpec, catalog, closed_form, get_identity, lhs_series, quadrature
from .core import EvalResult, exp_remainder, integral_repr, sum_series
from .errors import (
    DivergenceError,
    DomainError,
    NoConvergence,
    QuadratureFailure,
    SingularityError,
)
from .special import FnEval, bessel_i0, bessel_i1, ein, int_i0, lerch_phi, li2, struve_l0, struve_l1
from .verify import VerificationReport, emit, load_reports, verify_all, verify_identity

__all__ = [
    "IdentitySpec",
    "catalog",
    "closed_form",
    "get_identity",
    "lhs_series",
    "quadrature",
    "EvalResult",
    "exp_remainder",
    "integral_repr",
    "sum_series",
    "DivergenceError",
    "DomainError",
    "NoConvergence",
    "QuadratureFailure",
    "SingularityError",
    "FnEval",
    "bessel_i0",
    "bessel_i1",
    "ein",
    "int_i0",
    "lerch_phi",
    "li2",
    "struve_l0",
    "struve_l1",
    "VerificationReport",
    "emit",
    "load_reports",
    "verify_all",
    "verify_identity",
]
