"""Exponential remainders and the generic exotic-series evaluator.

Notation: E_n(y) = e^y - sum_{k<=n} y^k/k! and, for a coefficient sequence a_n
with EGF F(z) = sum a_n z^n / n!,

    u(x, y) = sum_n a_n E_n(y) x^n = e^y * integral_0^y e^{-t} F(x t) dt.

Internally E_n(y) = y^(n+1)/n! * S_n(y) with the scaled tail

    S_n(y) = sum_{j>=0} y^j n! / (n+1+j)! = 1/(n+1) * (1 + y/(n+2) + ...),

which is summed forward and never formed by subtracting a partial sum from e^y.
"""

from __future__ import annotations

import decimal
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import DomainError, NoConvergence
from .quadrature import adaptive_simpson

__all__ = [
    "EvalResult",
    "CoeffFamily",
    "GenFn",
    "N_MAX",
    "scaled_tail",
    "exp_remainder",
    "sum_series",
    "integral_repr",
    "convergence_domain",
    "ode_residual",
]

EPS = 2.0**-52
N_MAX = 500
Method = Literal["series", "quadrature", "closed_form"]


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_bound: float
    terms: int
    method: Method

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class CoeffFamily:
    """Coefficient sequence a_n with exact values and its EGF radius."""

    name: str
    exact_at: Callable[[int], Fraction]
    egf_radius: float = math.inf
    last_index: int | None = None  # highest nonzero index for finite sequences
    _egf_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def float_at(self, n: int) -> float:
        return float(self.exact_at(n))

    def egf_coeff(self, n: int) -> float:
        """a_n / n! rounded once from the exact ratio."""
        c = self._egf_cache.get(n)
        if c is None:
            c = float(Fraction(self.exact_at(n)) / math.factorial(n))
            self._egf_cache[n] = c
        return c


@dataclass(frozen=True)
class GenFn:
    """Generating function F(z) on the open real interval ``domain``."""

    name: str
    fn: Callable[[float], float]
    domain: tuple[float, float] = (-math.inf, math.inf)

    def __call__(self, z: float) -> float:
        return self.fn(z)

    def eval(self, z: float) -> float:
        lo, hi = self.domain
        if not lo < z < hi:
            raise DomainError(f"{self.name}: argument {z} outside {self.domain}")
        return self.fn(z)

    def covers_segment(self, z0: float, z1: float) -> bool:
        lo, hi = self.domain
        return lo < min(z0, z1) and max(z0, z1) < hi


def scaled_tail(n: int, y: float, rtol: float = 2.0**-56) -> tuple[float, float, int]:
    """Return (S_n(y), error bound, terms) with E_n(y) = y^(n+1)/n! * S_n(y)."""
    t = 1.0 / (n + 1)
    if y == 0.0:
        return t, 0.0, 1
    s = t
    abs_s = t
    ay = abs(y)
    j = 0
    while True:
        j += 1
        t *= y / (n + 1 + j)
        s += t
        abs_s += abs(t)
        r = ay / (n + 2 + j)
        if r < 1.0:
            tail = abs(t) * r / (1.0 - r)
            if tail <= rtol * abs(s):
                break
        if j > 100_000:
            raise NoConvergence(f"remainder tail for n={n}, y={y}")
    return s, tail + 2.0 * (j + n + 4) * EPS * abs_s, j + 1


def _power_over_factorial(y: float, n: int) -> float:
    # y^(n+1) / n!
    if n <= 150 and (y == 0.0 or (n + 1) * math.log10(abs(y)) < 300):
        return math.pow(y, n + 1) / math.factorial(n)
    v = y
    for k in range(1, n + 1):
        v *= y / k
    return v


def exp_remainder(n: int, y: float, rtol: float = 2.0**-56) -> EvalResult:
    """E_n(y) = e^y - 1 - y - ... - y^n/n! as a forward tail sum."""
    if n < 0:
        raise ValueError("n must be >= 0")
    y = float(y)
    if y == 0.0:
        return EvalResult(0.0, 0.0, 0, "series")
    s, err, terms = scaled_tail(n, y, rtol)
    pref = _power_over_factorial(y, n)
    value = pref * s
    bound = abs(pref) * err + 4 * EPS * abs(value) + math.ulp(0.0)
    if y < -1.0 and n < 4 * abs(y):
        # the tail alternates with terms up to ~e^|y|; when e^y is negligible
        # against the partial sum, subtracting from e^y is the better-conditioned route
        head = [1.0]
        for k in range(1, n + 1):
            head.append(head[-1] * y / k)
        alt = math.exp(y) - math.fsum(head)
        alt_bound = 2.0 * (n + 4) * EPS * (math.exp(y) + math.fsum(abs(h) for h in head))
        if alt_bound < bound:
            return EvalResult(alt, alt_bound, n + 1, "series")
    return EvalResult(value, bound, terms, "series")


def convergence_domain(family: CoeffFamily) -> Callable[[float, float], bool]:
    """Predicate |x y| < R for the family's EGF radius R."""
    radius = family.egf_radius
    if math.isinf(radius):
        return lambda x, y: True
    return lambda x, y: abs(x * y) < radius


def _on_boundary(family: CoeffFamily, x: float, y: float) -> bool:
    return math.isfinite(family.egf_radius) and math.isclose(
        abs(x * y), family.egf_radius, rel_tol=1e-12
    )


def sum_series(
    family: CoeffFamily,
    x: float,
    y: float,
    tol: float = 1e-13,
    *,
    start: int = 0,
    conditional: bool = False,
    n_max: int = N_MAX,
) -> EvalResult:
    """Truncated sum of a_n E_n(y) x^n for n >= ``start``.

    Each term is bounded by |a_n| |x|^n |y|^(n+1) e^|y| / (n! (n+1)). Summation
    stops once a geometric tail estimate built from the last few nonzero
    bounds drops below ``tol``; that estimate plus a rounding term is the
    reported error bound.

    With ``conditional=True`` a point exactly on the circle |x y| = R is
    summed in order up to ``n_max`` terms, which must alternate in sign; the
    last partial sums are then averaged repeatedly and the final gap
    between neighbours is reported as the bound.

    Raises:
        DomainError: |x y| >= R (outside the conditional boundary case).
        NoConvergence: ``n_max`` terms used without meeting ``tol``.
    """
    x = float(x)
    y = float(y)
    if tol <= 0:
        raise ValueError("tol must be positive")
    boundary = _on_boundary(family, x, y)
    if not convergence_domain(family)(x, y) and not boundary:
        raise DomainError(
            f"{family.name}: |x*y| = {abs(x * y):g} outside radius {family.egf_radius:g}"
        )
    if boundary and not conditional:
        raise DomainError(
            f"{family.name}: |x*y| on the convergence boundary; pass conditional=True"
        )
    if y == 0.0:
        return EvalResult(0.0, 0.0, 0, "series")

    xy = x * y
    growth = abs(y) * math.exp(abs(y))
    terms: list[float] = []
    recent: list[tuple[int, float]] = []
    pw = 1.0 if start == 0 else xy**start

    term_errs: list[float] = []

    def term_at(n: int, pw: float) -> tuple[float, float]:
        c = family.egf_coeff(n)
        if c == 0.0 or pw == 0.0:
            term_errs.append(0.0)
            return 0.0, 0.0
        s, s_err, _ = scaled_tail(n, y)
        term_errs.append(abs(c * pw * y) * s_err)
        return c * pw * y * s, abs(c) * abs(pw) * growth / (n + 1)

    tail = math.inf
    n = start
    while True:
        term, bound = term_at(n, pw)
        terms.append(term)
        last = family.last_index
        if (last is not None and n >= last) or pw * xy == 0.0:
            tail = 0.0
            break
        if boundary:
            if n >= n_max:
                signs = [math.copysign(1.0, t) for t in terms[-6:] if t != 0.0]
                if any(a == b for a, b in zip(signs, signs[1:])):
                    raise NoConvergence(f"{family.name}: boundary series is not alternating")
                value, tail = _average_partial_sums(terms, tol)
                rounding = 32.0 * EPS * math.fsum(abs(t) for t in terms) + math.fsum(term_errs)
                return EvalResult(value, tail + rounding, len(terms), "series")
        else:
            if bound > 0.0:
                recent.append((n, bound))
                del recent[:-5]
            if len(recent) >= 3 and n - start >= 3:
                rhos = [
                    (b1 / b0) ** (1.0 / (i1 - i0))
                    for (i0, b0), (i1, b1) in zip(recent, recent[1:])
                ]
                rho = max(rhos)
                if rho < 1.0:
                    i_last, b_last = recent[-1]
                    tail = max(b for _, b in recent) * rho ** (n + 1 - i_last) / (1.0 - rho)
                    if tail < tol:
                        break
            if n >= n_max:
                raise NoConvergence(
                    f"{family.name}: {n_max} terms at x={x}, y={y} without reaching tol={tol:g}"
                )
        n += 1
        pw *= xy

    value = math.fsum(terms)
    abs_sum = math.fsum(abs(t) for t in terms)
    rounding = 32.0 * EPS * abs_sum + math.fsum(term_errs)
    if rounding > tol and value != 0.0:
        # heavy cancellation: redo the same terms with enough extra digits
        digits = 20 + math.ceil(math.log10(abs_sum / max(abs(value), tol)))
        if y < 0.0:
            digits += math.ceil(2.0 * -y / math.log(10.0))  # cancellation inside S_n(y)
        value, rounding = _sum_decimal(family, x, y, start, len(terms), digits)
    return EvalResult(value, tail + rounding, len(terms), "series")


def _average_partial_sums(terms: list[float], tol: float, depth: int = 24) -> tuple[float, float]:
    # Repeated averaging of the last partial sums of an alternating series.
    # Neighbours at every level bracket the limit, so their gap bounds the error.
    head = math.fsum(terms[:-depth])
    level = []
    acc = head
    for t in terms[-depth:]:
        acc += t
        level.append(acc)
    best = (level[-1], abs(terms[-1]))
    while len(level) > 1:
        gap = abs(level[-1] - level[-2])
        if gap < best[1]:
            best = (0.5 * (level[-1] + level[-2]), 0.5 * gap)
        if gap <= tol:
            break
        level = [0.5 * (a + b) for a, b in zip(level, level[1:])]
    return best


def _sum_decimal(
    family: CoeffFamily, x: float, y: float, start: int, count: int, digits: int
) -> tuple[float, float]:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        D = decimal.Decimal
        yd = D(y)
        xy = D(x) * yd
        stop = D(10) ** -(digits - 2)
        total = D(0)
        abs_total = D(0)
        pw = D(1) if start == 0 else xy**start
        for n in range(start, start + count):
            a = Fraction(family.exact_at(n)) / math.factorial(n)
            if n > start:
                pw *= xy
            if a == 0:
                continue
            t = u = D(1) / (n + 1)
            j = 0
            while abs(t) > stop * abs(u) or j < abs(y):
                j += 1
                t = t * yd / (n + 1 + j)
                u += t
            term = D(a.numerator) / D(a.denominator) * pw * yd * u
            total += term
            abs_total += abs(term)
        value = float(total)
        err = float(abs_total) * 10.0 ** -(digits - 3) + EPS * abs(value)
    return value, err


def integral_repr(
    F: GenFn, x: float, y: float, tol: float = 1e-13, max_depth: int = 30
) -> EvalResult:
    """u(x, y) = e^y * integral_0^y e^{-t} F(x t) dt by adaptive Simpson.

    ``tol`` applies to u; the integral is oriented, so y < 0 is allowed.

    Raises:
        DomainError: F is not defined on the whole segment {x t}.
        QuadratureFailure: refinement depth exceeded.
    """
    x = float(x)
    y = float(y)
    if y == 0.0:
        return EvalResult(0.0, 0.0, 0, "quadrature")
    if not F.covers_segment(0.0, x * y):
        raise DomainError(f"{F.name} is not defined on the path from 0 to {x * y:g}")
    ey = math.exp(y)
    q = adaptive_simpson(lambda t: math.exp(-t) * F.fn(x * t), 0.0, y, tol / ey, max_depth)
    value = ey * q.value
    return EvalResult(value, ey * q.error + 4 * EPS * abs(value), q.intervals, "quadrature")


def ode_residual(
    family: CoeffFamily, F: GenFn, x: float, y: float, h: float, tol: float = 1e-15
) -> float:
    """|(u(y+h) - u(y-h))/(2h) - u(y) - F(x y)|, which vanishes as h -> 0."""
    up = sum_series(family, x, y + h, tol).value
    um = sum_series(family, x, y - h, tol).value
    u0 = sum_series(family, x, y, tol).value
    return abs((up - um) / (2.0 * h) - u0 - F(x * y))
