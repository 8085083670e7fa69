"""Registry of exotic-series identities and their closed-form evaluators.

Each :class:`IdentitySpec` binds a coefficient family, its generating
function (the integrand of the quadrature oracle), the closed form as
printed, an optional corrected form, and the standard verification grid.

Two printed forms do not survive numerical checking and are registered as
``flagged`` with a corrected companion:

* ID-BERN-X1: the constant and e^y terms of the x = 1 Bernoulli evaluation
  are misplaced; the corrected form is the x = 1 specialization of the
  general Lerch-transcendent evaluation.
* ID-STIRLING: the binomial expansion of (e^{xt} - 1)^k carries the sign
  (-1)^(k-j), not (-1)^j; the printed form is off by (-1)^k.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Literal

from . import families as fam
from .core import CoeffFamily, EvalResult, GenFn, integral_repr, scaled_tail, sum_series
from .errors import DomainError, SingularityError
from .exact import stirling2
from .special import FnEval, bessel_i0, bessel_i1, ein, int_i0, lerch_phi, li2, struve_l0, struve_l1

__all__ = [
    "Params",
    "IdentitySpec",
    "catalog",
    "get_identity",
    "closed_form",
    "lhs_series",
    "quadrature",
    "normalize_params",
    "ein_integral_series",
]

EPS = 2.0**-52
PI2_6 = math.pi**2 / 6
TWO_PI = 2.0 * math.pi

Params = Mapping[str, float]
Status = Literal["verified", "corrected", "flagged"]
ClosedFn = Callable[[float, float, Params], EvalResult]


def _closed(value: float, err: float = 0.0, scale: float = 0.0) -> EvalResult:
    bound = err + 16.0 * EPS * max(abs(value), scale)
    return EvalResult(value, bound, 0, "closed_form")


def _fn_err(*evals: tuple[float, FnEval]) -> float:
    return sum(abs(w) * e.abs_error_bound for w, e in evals)


def _bounded_series(
    term: Callable[[int], float], bound: Callable[[int], float], n_max: int = 5000
) -> tuple[float, float, int]:
    """Sum term(n) for n >= 0 with |term(m)| <= bound(m) and bound log-concave."""
    terms: list[float] = []
    n = 0
    while True:
        terms.append(term(n))
        b1, b2 = bound(n + 1), bound(n + 2)
        if b1 == 0.0:
            tail = 0.0
            break
        r = b2 / b1
        if r < 1.0:
            tail = b1 / (1.0 - r)
            if tail <= 2.0**-56 * max(abs(math.fsum(terms)), 1e-300):
                break
        n += 1
        if n > n_max:
            raise DomainError("closed-form series did not converge")
    value = math.fsum(terms)
    return value, tail + 4.0 * (n + 2) * EPS * math.fsum(abs(t) for t in terms), n + 1


# --- closed forms ---------------------------------------------------------------


def _geom(x: float, y: float, params: Params) -> EvalResult:
    if x == 1.0:
        return _geom_x1(x, y, params)
    # (e^{xy} - e^y)/(x - 1) = e^{xy} expm1((1-x) y)/(1-x), accurate up to x = 1
    d = 1.0 - x
    return _closed(math.exp(x * y) * math.expm1(d * y) / d)


def _geom_x1(x: float, y: float, params: Params) -> EvalResult:
    return _closed(y * math.exp(y))


def _binom(x: float, y: float, params: Params) -> EvalResult:
    # x^p e^y (1-x)^{-(p+1)} (1 - e^{-w} sum_{j<=p} w^j/j!) with w = (1-x) y;
    # the bracket is e^{-w} E_p(w) = e^{-w} w^{p+1} S_p(w)/p!, so the
    # (1-x)^{p+1} cancels and the form stays regular through x = 1
    p = params["p"]
    s, s_err, _ = scaled_tail(p, (1.0 - x) * y)
    pref = x**p * math.exp(x * y) * y ** (p + 1) / math.factorial(p)
    return _closed(pref * s, abs(pref) * s_err)


def _binom_x1(x: float, y: float, params: Params) -> EvalResult:
    p = params["p"]
    return _closed(math.exp(y) * y ** (p + 1) / math.factorial(p + 1))


def _powers(x: float, y: float, params: Params) -> EvalResult:
    # sum_k S(p,k) k! x^k (1-x)^{-(k+1)} (e^y - e^{xy} sum_{j<=k} w^j/j!), w = (1-x) y,
    # with each bracket rewritten as e^{xy} E_k(w) as in _binom
    p = params["p"]
    w = (1.0 - x) * y
    exy = math.exp(x * y)
    parts = []
    err = 0.0
    for k in range(p + 1):
        c = float(stirling2(p, k))
        if c == 0.0:
            continue
        s, s_err, _ = scaled_tail(k, w)
        pref = c * x**k * y ** (k + 1) * exy
        parts.append(pref * s)
        err += abs(pref) * s_err
    return _closed(math.fsum(parts), err, scale=math.fsum(abs(t) for t in parts))


def _powers_x1(x: float, y: float, params: Params) -> EvalResult:
    p = params["p"]
    total = math.fsum(float(stirling2(p, k)) * y ** (k + 1) / (k + 1) for k in range(p + 1))
    return _closed(math.exp(y) * total)


def _bern(x: float, y: float, params: Params) -> EvalResult:
    if x == 0.0:
        raise SingularityError("the Lerch form has a 1/x factor; x = 0 has no limit branch")
    a = 1.0 / x
    z = math.exp(-x * y)
    zeta = lerch_phi(1.0, 2, a)
    phi1 = lerch_phi(z, 1, a)
    phi2 = lerch_phi(z, 2, a)
    ey = math.exp(y)
    pieces = (ey / x * zeta.value, -y * phi1.value, -phi2.value / x, x * (y + 1.0 - ey))
    err = _fn_err((ey / x, zeta), (y, phi1), (1.0 / x, phi2))
    return _closed(math.fsum(pieces), err, sum(abs(v) for v in pieces))


def _bern_logs(y: float) -> tuple[float, FnEval]:
    # ln(1 - e^{-y}) and Li2(e^{-y}) for y > 0
    return math.log(-math.expm1(-y)), li2(math.exp(-y))


def _bern_x1_printed(x: float, y: float, params: Params) -> EvalResult:
    log_term, dilog = _bern_logs(y)
    ey = math.exp(y)
    inner = y * log_term - dilog.value
    pieces = (ey * inner, PI2_6, -1.0, y)
    return _closed(math.fsum(pieces), ey * dilog.abs_error_bound, sum(abs(v) for v in pieces))


def _bern_x1_corrected(x: float, y: float, params: Params) -> EvalResult:
    log_term, dilog = _bern_logs(y)
    ey = math.exp(y)
    inner = PI2_6 + y * log_term - dilog.value
    pieces = (ey * inner, y, 1.0, -ey)
    scale = ey * (PI2_6 + abs(y * log_term) + dilog.value) + abs(y) + 1.0 + ey
    return _closed(math.fsum(pieces), ey * dilog.abs_error_bound, scale)


def _bern_xm1(x: float, y: float, params: Params) -> EvalResult:
    log_term, dilog = _bern_logs(y)
    ey = math.exp(y)
    inner = y * log_term - dilog.value + PI2_6
    scale = ey * (abs(y * log_term) + dilog.value + PI2_6)
    return _closed(ey * inner, ey * dilog.abs_error_bound, scale)


def _stirling_term(j: int, x: float, y: float) -> tuple[float, float]:
    # (e^{jxy} - e^y) / (jx - 1) with the jx -> 1 limit y e^y
    d = j * x - 1.0
    if d == 0.0:
        ey = math.exp(y)
        return y * ey, abs(y) * ey
    # e^{jxy} expm1(-d y) / (-d) keeps full precision as d -> 0
    v = math.exp(j * x * y) * math.expm1(-d * y) / -d
    return v, abs(v)


def _stirling(sign: Callable[[int, int], int]) -> ClosedFn:
    def closed(x: float, y: float, params: Params) -> EvalResult:
        k = params["k"]
        parts = []
        scale = 0.0
        for j in range(k + 1):
            t, mag = _stirling_term(j, x, y)
            c = math.comb(k, j) * sign(k, j)
            parts.append(c * t)
            scale += abs(c) * mag
        fk = math.factorial(k)
        return _closed(math.fsum(parts) / fk, scale=scale / fk)

    return closed


_stirling_printed = _stirling(lambda k, j: (-1) ** j)
_stirling_corrected = _stirling(lambda k, j: (-1) ** (k - j))


def _exppoly_xm1(x: float, y: float, params: Params) -> EvalResult:
    lam = params["lam"]
    if lam == 0.0:
        raise SingularityError("lambda = 0 is excluded (division by lambda)")
    # 1 - e^{lam (e^{-y} - 1)} evaluated without cancellation
    val = math.exp(y) / lam * -math.expm1(lam * math.expm1(-y))
    return _closed(val)


def _harmonic_x1(x: float, y: float, params: Params) -> EvalResult:
    e_in = ein(y)
    ey = math.exp(y)
    pieces = (ey * (y * e_in.value - y + 1.0), -1.0)
    scale = ey * (abs(y * e_in.value) + abs(y) + 1.0) + 1.0
    return _closed(math.fsum(pieces), ey * abs(y) * e_in.abs_error_bound, scale)


def ein_integral_series(y: float) -> EvalResult:
    """Integral of Ein over [0, y] as sum_{n>=1} (-1)^(n-1) y^(n+1) / (n! n (n+1))."""
    y = float(y)

    def term(i: int) -> float:
        n = i + 1
        return (-1) ** (n - 1) * y ** (n + 1) / (math.factorial(n) * n * (n + 1))

    def bound(i: int) -> float:
        return abs(term(i))

    if y == 0.0:
        return _closed(0.0)
    val, err, _ = _bounded_series(term, bound)
    return _closed(val, err)


def _harmonic_x1_series(x: float, y: float, params: Params) -> EvalResult:
    # the x = 1 harmonic sum is e^y times the integral of Ein
    s = ein_integral_series(y)
    ey = math.exp(y)
    return _closed(ey * s.value, ey * s.abs_error_bound)


def _factorial_eq_series(x: float, y: float, params: Params) -> EvalResult:
    # e^y sum_n d_n(x) y^(n+1) / (n+1)!, with d_n(x)/n! = sum_j (-1)^j x^(n-j) / j!
    ax, ay = abs(x), abs(y)
    scaled: list[float] = []

    def term(n: int) -> float:
        prev = scaled[-1] if scaled else 0.0
        e_n = x * prev + (-1) ** n / math.factorial(n)
        scaled.append(e_n)
        return e_n * y ** (n + 1) / (n + 1)

    def bound(n: int) -> float:
        # |d_n(x)/n!| <= e * max(1,|x|)^n and, for x != 0, <= e^{1/|x|} |x|^n
        b = math.e * max(1.0, ax) ** n
        if ax > 0.05:
            b = min(b, math.exp(1.0 / ax) * ax**n)
        return b * ay ** (n + 1) / (n + 1)

    val, err, _ = _bounded_series(term, bound)
    ey = math.exp(y)
    return _closed(ey * val, ey * err)


def _derange_integral_ein(x: float, y: float) -> tuple[float, float]:
    # integral_0^y e^{-t} / (1 - x t) dt through Ein, valid while 1 - x t > 0
    if x == 0.0:
        return -math.expm1(-y), 0.0
    v = (1.0 - x * y) / x
    e1, e2 = ein(-v), ein(-1.0 / x)
    pref = -math.exp(-1.0 / x) / x
    bracket = math.log1p(-x * y) - e1.value + e2.value
    err = abs(pref) * (e1.abs_error_bound + e2.abs_error_bound)
    scale = abs(pref) * (abs(math.log1p(-x * y)) + abs(e1.value) + abs(e2.value))
    return pref * bracket, err + 16 * EPS * scale


def _derange(x: float, y: float, params: Params) -> EvalResult:
    if 0.0 < abs(x) < 0.05:
        # Ein arguments near -1/x become large; the d_n(x) series converges fast here
        return _factorial_eq_series(x, y, params)
    val, err = _derange_integral_ein(x, y)
    ey = math.exp(y)
    return _closed(ey * val, ey * err)


def _struve_bracket(y: float) -> tuple[float, float, float]:
    i0, i1 = bessel_i0(y), bessel_i1(y)
    l0, l1 = struve_l0(y), struve_l1(y)
    br = i0.value * l1.value - i1.value * l0.value
    err = (
        i0.abs_error_bound * abs(l1.value)
        + l1.abs_error_bound * i0.value
        + i1.abs_error_bound * abs(l0.value)
        + l0.abs_error_bound * abs(i1.value)
        + 4 * EPS * (abs(i0.value * l1.value) + abs(i1.value * l0.value))
    )
    return i0.value, br, err


def _centralbinom_half(x: float, y: float, params: Params) -> EvalResult:
    s = int_i0(y)
    ey = math.exp(y)
    return _closed(ey * s.value, ey * s.abs_error_bound)


def _centralbinom_half_struve(x: float, y: float, params: Params) -> EvalResult:
    i0, br, err = _struve_bracket(y)
    ey = math.exp(y)
    half_pi_y = 0.5 * math.pi * y
    val = ey * (y * i0 + half_pi_y * br)
    return _closed(val, ey * abs(half_pi_y) * err, ey * (abs(y) * i0 + abs(half_pi_y * br)))


def _catalan_half(x: float, y: float, params: Params) -> EvalResult:
    s = int_i0(y)
    i0 = bessel_i0(y)
    ey = math.exp(y)
    val = ey * (1.0 - i0.value + s.value)
    return _closed(val, ey * (s.abs_error_bound + i0.abs_error_bound), ey * (1 + i0.value + abs(s.value)))


def _catalan_half_struve(x: float, y: float, params: Params) -> EvalResult:
    i0, br, err = _struve_bracket(y)
    ey = math.exp(y)
    half_pi_y = 0.5 * math.pi * y
    val = ey * (1.0 + (y - 1.0) * i0 + half_pi_y * br)
    scale = ey * (1.0 + abs(y - 1.0) * i0 + abs(half_pi_y * br))
    return _closed(val, ey * abs(half_pi_y) * err, scale)


def _laguerre_egf(x: float, y: float, params: Params) -> EvalResult:
    # e^y sum_n (-1)^n L_n(x) y^(n+1)/(n+1)!, L_n by the three-term recurrence
    ls: list[float] = []
    powers: list[float] = []  # y^(n+1)/(n+1)!
    ay, ax = abs(y), abs(x)

    def term(n: int) -> float:
        if n == 0:
            cur = 1.0
        elif n == 1:
            cur = 1.0 - x
        else:
            k = n - 1
            cur = ((2 * k + 1 - x) * ls[-1] - k * ls[-2]) / (k + 1)
        ls.append(cur)
        powers.append(y if n == 0 else powers[-1] * y / (n + 1))
        return (-1) ** n * cur * powers[-1]

    def bound(n: int) -> float:
        # |L_n(x)| <= sum_k C(n,k)|x|^k/k! <= e^{2 sqrt(n |x|)}
        return math.exp(2.0 * math.sqrt(n * ax) + (n + 1) * math.log(ay) - math.lgamma(n + 2))

    if y == 0.0:
        return _closed(0.0)
    val, err, _ = _bounded_series(term, bound)
    ey = math.exp(y)
    return _closed(ey * val, ey * err)


# --- validity predicates --------------------------------------------------------


def _always(x: float, y: float, params: Params) -> bool:
    return True


def _at_x(value: float) -> Callable[[float, float, Params], bool]:
    return lambda x, y, params: x == value


def _bern_valid(x: float, y: float, params: Params) -> bool:
    return x >= 0.0 and y > 0.0 and x * y < TWO_PI


def _bern_fixed(value: float) -> Callable[[float, float, Params], bool]:
    return lambda x, y, params: x == value and 0.0 < y < TWO_PI


def _factorial_valid(x: float, y: float, params: Params) -> bool:
    return abs(x * y) < 1.0


def _derange_valid(x: float, y: float, params: Params) -> bool:
    return y == -1.0 and -1.0 < x <= 1.0


# --- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class IdentitySpec:
    """One identity: sum a_n E_n(y) x^n = closed form, plus its test grid."""

    id: str
    description: str
    family: Callable[[Params], CoeffFamily]
    genfn: Callable[[Params], GenFn]
    closed: ClosedFn
    validity: Callable[[float, float, Params], bool]
    status: Status = "verified"
    corrected: ClosedFn | None = None
    alternates: Mapping[str, ClosedFn] = field(default_factory=dict)
    param_names: tuple[str, ...] = ()
    std_x: tuple[float, ...] = ()
    std_y: tuple[float, ...] = ()
    std_params: tuple[Mapping[str, float], ...] = (MappingProxyType({}),)
    grid_filter: Callable[[float, float, Params], bool] | None = None
    conditional: bool = False

    def standard_grid(self) -> list[tuple[float, float, dict]]:
        pts = []
        for params, x, y in product(self.std_params, self.std_x, self.std_y):
            if self.grid_filter is None or self.grid_filter(x, y, params):
                pts.append((x, y, dict(params)))
        return pts

    def is_valid(self, x: float, y: float, params: Params) -> bool:
        return self.validity(float(x), float(y), params)


def _p(params: Params) -> int:
    return params["p"]


def _k(params: Params) -> int:
    return params["k"]


def _lam(params: Params) -> float:
    return params["lam"]


_P_GRID = tuple(MappingProxyType({"p": p}) for p in range(9))
_K_GRID = tuple(MappingProxyType({"k": k}) for k in range(9))
_LAM_GRID = tuple(MappingProxyType({"lam": v}) for v in (-0.5, 0.5, 1.0, 2.0))
_Y_X1 = (-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0)
_Y_POS = (0.25, 0.5, 1.0, 1.5, 2.0, 3.0)


def _build() -> tuple[IdentitySpec, ...]:
    const = lambda f: (lambda params: f())  # noqa: E731
    specs = [
        IdentitySpec(
            "ID-GEOM",
            "ordinary generating function of E_n(y): (e^{xy} - e^y)/(x - 1)",
            const(fam.ones), const(fam.exp_genfn), _geom, _always,
            std_x=(-2.0, -0.5, 0.0, 0.5, 2.0), std_y=(-3.0, -2.0, -0.5, 0.0, 0.5, 2.0, 3.0),
        ),
        IdentitySpec(
            "ID-GEOM-X1",
            "sum of E_n(y) over n >= 0 equals y e^y",
            const(fam.ones), const(fam.exp_genfn), _geom_x1, _at_x(1.0),
            std_x=(1.0,), std_y=_Y_X1,
        ),
        IdentitySpec(
            "ID-BINOM",
            "coefficients C(n,p): x^p e^y (1-x)^-(p+1) (1 - e^{-(1-x)y} sum_j ((1-x)y)^j/j!)",
            lambda ps: fam.binomial_family(_p(ps)), lambda ps: fam.binomial_genfn(_p(ps)),
            _binom, _always, param_names=("p",),
            std_x=(-1.0, 0.0, 0.5, 2.0), std_y=(-2.0, 0.5, 1.0, 2.0), std_params=_P_GRID,
        ),
        IdentitySpec(
            "ID-BINOM-X1",
            "coefficients C(n,p) at x = 1: e^y y^(p+1)/(p+1)!",
            lambda ps: fam.binomial_family(_p(ps)), lambda ps: fam.binomial_genfn(_p(ps)),
            _binom_x1, _at_x(1.0), param_names=("p",),
            std_x=(1.0,), std_y=(-2.0, -1.0, 0.5, 1.0, 2.0, 3.0), std_params=_P_GRID,
        ),
        IdentitySpec(
            "ID-POWERS",
            "coefficients n^p through Stirling numbers S(p,k)",
            lambda ps: fam.powers_family(_p(ps)), lambda ps: fam.powers_genfn(_p(ps)),
            _powers, _always, param_names=("p",),
            std_x=(-1.0, 0.0, 0.5, 2.0), std_y=(-2.0, 0.5, 1.0, 2.0), std_params=_P_GRID,
        ),
        IdentitySpec(
            "ID-POWERS-X1",
            "coefficients n^p at x = 1: e^y sum_k S(p,k) y^(k+1)/(k+1)",
            lambda ps: fam.powers_family(_p(ps)), lambda ps: fam.powers_genfn(_p(ps)),
            _powers_x1, _at_x(1.0), param_names=("p",),
            std_x=(1.0,), std_y=(-2.0, -1.0, 0.5, 1.0, 2.0, 3.0), std_params=_P_GRID,
        ),
        IdentitySpec(
            "ID-BERN",
            "Bernoulli coefficients through the Lerch transcendent, x, y > 0",
            const(fam.bernoulli_family), const(fam.bernoulli_genfn), _bern, _bern_valid,
            std_x=(0.5, 1.0, 2.0), std_y=_Y_POS,
            grid_filter=lambda x, y, ps: abs(x * y) <= 5.0,
        ),
        IdentitySpec(
            "ID-BERN-X1",
            "Bernoulli coefficients at x = 1 through ln(1 - e^-y) and Li2(e^-y)",
            const(fam.bernoulli_family), const(fam.bernoulli_genfn),
            _bern_x1_printed, _bern_fixed(1.0), status="flagged", corrected=_bern_x1_corrected,
            std_x=(1.0,), std_y=_Y_POS,
        ),
        IdentitySpec(
            "ID-BERN-XM1",
            "Bernoulli coefficients at x = -1: e^y (y ln(1-e^-y) - Li2(e^-y) + pi^2/6)",
            const(fam.bernoulli_family), const(fam.bernoulli_genfn), _bern_xm1, _bern_fixed(-1.0),
            std_x=(-1.0,), std_y=_Y_POS,
        ),
        IdentitySpec(
            "ID-STIRLING",
            "Stirling coefficients S(n,k): binomial expansion of (e^{xt} - 1)^k",
            lambda ps: fam.stirling_family(_k(ps)), lambda ps: fam.stirling_genfn(_k(ps)),
            _stirling_printed, _always, status="flagged", corrected=_stirling_corrected,
            param_names=("k",),
            std_x=(-1.0, 0.5, 0.7, 1.5), std_y=(-1.0, 0.5, 1.0, 2.0), std_params=_K_GRID,
        ),
        IdentitySpec(
            "ID-EXPPOLY-XM1",
            "exponential polynomial coefficients phi_n(lam) at x = -1",
            lambda ps: fam.exppoly_family(_lam(ps)), lambda ps: fam.exppoly_genfn(_lam(ps)),
            _exppoly_xm1, _at_x(-1.0), param_names=("lam",),
            std_x=(-1.0,), std_y=(-2.0, -1.0, 0.5, 1.0, 2.0, 3.0), std_params=_LAM_GRID,
        ),
        IdentitySpec(
            "ID-HARMONIC-X1",
            "harmonic coefficients at x = 1: e^y (y Ein(y) - y + 1) - 1",
            const(fam.harmonic_family), const(fam.harmonic_genfn), _harmonic_x1, _at_x(1.0),
            alternates=MappingProxyType({"series": _harmonic_x1_series}),
            std_x=(1.0,), std_y=(-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0),
        ),
        IdentitySpec(
            "ID-FACTORIAL",
            "coefficients n!: e^y sum_n d_n(x) y^(n+1)/(n+1!) with derangement polynomials",
            const(fam.factorial_family), const(fam.factorial_genfn),
            _factorial_eq_series, _factorial_valid,
            std_x=(-2.0, -1.0, -0.5, 0.5, 1.0, 2.0), std_y=(-0.8, -0.4, 0.4, 0.8),
            grid_filter=lambda x, y, ps: abs(x * y) <= 0.8,
        ),
        IdentitySpec(
            "ID-DERANGE",
            "sum (e^-1 n! - D_n) x^n = e^-1 integral_0^-1 e^-t/(1 - x t) dt, via Ein",
            const(fam.factorial_family), const(fam.factorial_genfn), _derange, _derange_valid,
            std_x=(-0.9, -0.5, 0.5, 0.9, 1.0), std_y=(-1.0,), conditional=True,
        ),
        IdentitySpec(
            "ID-CENTRALBINOM-HALF",
            "coefficients C(2n,n) at x = 1/2: e^y integral_0^y I0",
            const(fam.central_binomial_family), const(fam.central_binomial_genfn),
            _centralbinom_half, _at_x(0.5),
            alternates=MappingProxyType({"struve": _centralbinom_half_struve}),
            std_x=(0.5,), std_y=(-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0),
        ),
        IdentitySpec(
            "ID-CATALAN-HALF",
            "Catalan coefficients at x = 1/2: e^y (1 - I0(y) + integral_0^y I0)",
            const(fam.catalan_family), const(fam.catalan_genfn), _catalan_half, _at_x(0.5),
            alternates=MappingProxyType({"struve": _catalan_half_struve}),
            std_x=(0.5,), std_y=(-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0),
        ),
        IdentitySpec(
            "ID-LAGUERRE-EGF",
            "exponential generating function of E_n(y) through Laguerre polynomials",
            const(fam.inverse_factorial_family), const(fam.inverse_factorial_genfn),
            _laguerre_egf, _always,
            std_x=(-2.0, -1.0, 0.0, 0.5, 1.0, 2.0), std_y=(-2.0, -1.0, 0.5, 1.0, 2.0),
        ),
    ]
    return tuple(specs)


_CATALOG = _build()
_BY_ID = {s.id: s for s in _CATALOG}


def catalog() -> tuple[IdentitySpec, ...]:
    return _CATALOG


def get_identity(identity: str | IdentitySpec) -> IdentitySpec:
    """Look up a spec by id; case-insensitive, the ``ID-`` prefix is optional."""
    if isinstance(identity, IdentitySpec):
        return identity
    key = identity.strip().upper()
    if not key.startswith("ID-"):
        key = "ID-" + key
    try:
        return _BY_ID[key]
    except KeyError:
        raise KeyError(f"unknown identity {identity!r}") from None


def normalize_params(spec: IdentitySpec, params: Mapping[str, float] | None) -> dict:
    """Check parameter names and coerce p, k to non-negative integers."""
    params = dict(params or {})
    if "lambda" in params:
        params["lam"] = params.pop("lambda")
    extra = set(params) - set(spec.param_names)
    missing = set(spec.param_names) - set(params)
    if extra or missing:
        raise DomainError(
            f"{spec.id} takes parameters {list(spec.param_names)}, got {sorted(params)}"
        )
    for name in ("p", "k"):
        if name in params:
            v = params[name]
            if isinstance(v, Fraction) or float(v) != int(v) or int(v) < 0:
                raise DomainError(f"{name} must be a non-negative integer, got {v}")
            params[name] = int(v)
    if "lam" in params:
        params["lam"] = float(params["lam"])
    return params


def _prepare(identity, x, y, params) -> tuple[IdentitySpec, float, float, dict]:
    spec = get_identity(identity)
    params = normalize_params(spec, params)
    x, y = float(x), float(y)
    if not spec.is_valid(x, y, params):
        raise DomainError(f"{spec.id}: (x={x:g}, y={y:g}, {params}) outside validity region")
    return spec, x, y, params


def closed_form(
    identity: str | IdentitySpec,
    x: float,
    y: float,
    params: Params | None = None,
    form: str = "printed",
) -> EvalResult:
    """Evaluate the identity's right-hand side.

    ``form`` selects ``"printed"``, ``"corrected"`` (flagged identities only),
    or a named alternate such as ``"struve"``.

    Raises:
        DomainError: outside the validity predicate, or unknown form.
        SingularityError: an excluded denominator value with no limit branch.
    """
    spec, x, y, params = _prepare(identity, x, y, params)
    if form == "printed":
        fn = spec.closed
    elif form == "corrected":
        if spec.corrected is None:
            raise DomainError(f"{spec.id} has no corrected form")
        fn = spec.corrected
    elif form in spec.alternates:
        fn = spec.alternates[form]
    else:
        raise DomainError(f"{spec.id} has no form {form!r}")
    return fn(x, y, params)


def lhs_series(
    identity: str | IdentitySpec,
    x: float,
    y: float,
    params: Params | None = None,
    tol: float = 1e-13,
) -> EvalResult:
    """Left-hand side by truncated summation with the identity's coefficients."""
    spec, x, y, params = _prepare(identity, x, y, params)
    return sum_series(spec.family(params), x, y, tol, conditional=spec.conditional)


def quadrature(
    identity: str | IdentitySpec,
    x: float,
    y: float,
    params: Params | None = None,
    tol: float = 1e-13,
) -> EvalResult:
    """Left-hand side through the integral representation."""
    spec, x, y, params = _prepare(identity, x, y, params)
    return integral_repr(spec.genfn(params), x, y, tol)
