"""Real-argument special functions used by the closed forms.

All routines sum power series (or a short Euler-Maclaurin correction for the
Hurwitz case of the Lerch transcendent) and return a :class:`FnEval` with an
a posteriori error bound: a geometric/alternating tail bound plus a
worst-case accumulated rounding term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError, NoConvergence

__all__ = [
    "FnEval",
    "ein",
    "li2",
    "lerch_phi",
    "bessel_i0",
    "bessel_i1",
    "struve_l0",
    "struve_l1",
    "int_i0",
]

EPS = 2.0**-52
PI2_6 = math.pi**2 / 6
MAX_TERMS = 1_000_000
DEFAULT_RTOL = 2.0**-56


@dataclass(frozen=True)
class FnEval:
    value: float
    abs_error_bound: float
    terms_used: int

    def __float__(self) -> float:
        return self.value


def _rounding(n: int, abs_sum: float) -> float:
    return 2.0 * (n + 2) * EPS * abs_sum


def ein(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """Ein(z) = sum_{n>=1} (-1)^(n-1) z^n / (n! n), an entire function.

    Negative z gives a same-sign series; positive z alternates, so accuracy
    degrades roughly like e^z * eps for large positive z.
    """
    z = float(z)
    if z == 0.0:
        return FnEval(0.0, 0.0, 0)
    az = abs(z)
    s = abs_s = 0.0
    p = 1.0  # (-z)^n / n!
    n = 0
    while True:
        n += 1
        p *= -z / n
        t = -p / n
        s += t
        abs_s += abs(t)
        r = az / (n + 2)
        if r < 1.0:
            tail = abs(p) * az / ((n + 1) * (n + 1)) / (1.0 - r)
            if tail <= rtol * abs(s):
                break
        if n >= MAX_TERMS:
            raise NoConvergence(f"ein({z}) did not converge")
    return FnEval(s, tail + _rounding(n, abs_s), n)


def _li2_series(w: float, rtol: float) -> FnEval:
    # |w| <= 1/2
    if w == 0.0:
        return FnEval(0.0, 0.0, 0)
    aw = abs(w)
    s = abs_s = 0.0
    p = 1.0
    n = 0
    while True:
        n += 1
        p *= w
        t = p / (n * n)
        s += t
        abs_s += abs(t)
        tail = abs(p) * aw / ((n + 1) ** 2 * (1.0 - aw))
        if tail <= rtol * abs(s):
            break
    return FnEval(s, tail + _rounding(n, abs_s), n)


def li2(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """Dilogarithm on the real branch z <= 1.

    Direct series for |z| <= 1/2, reflection for 1/2 < z < 1, and the
    Landen map z -> z/(z-1) for z < -1/2.
    """
    z = float(z)
    if z > 1.0:
        raise DomainError(f"li2 requires z <= 1, got {z}")
    if z == 1.0:
        return FnEval(PI2_6, EPS * PI2_6, 0)
    if abs(z) <= 0.5:
        return _li2_series(z, rtol)
    if z > 0.5:
        inner = _li2_series(1.0 - z, rtol)
        logs = math.log(z) * math.log1p(-z)
        val = PI2_6 - logs - inner.value
        err = inner.abs_error_bound + 4 * EPS * (PI2_6 + abs(logs) + abs(inner.value))
        return FnEval(val, err, inner.terms_used)
    # z < -1/2: w = z/(z-1) lies in (1/3, 1)
    w = z / (z - 1.0)
    inner = li2(w, rtol)
    half_sq = 0.5 * math.log1p(-z) ** 2
    val = -half_sq - inner.value
    err = inner.abs_error_bound + 4 * EPS * (half_sq + abs(inner.value))
    return FnEval(val, err, inner.terms_used)


def _hurwitz_zeta2(a: float, tol: float) -> FnEval:
    # zeta(2, a) = sum_{n<N} (n+a)^-2 + 1/(N+a) + 1/(2(N+a)^2) + 1/(6(N+a)^3) + R,
    # |R| <= 1/(30 (N+a)^5)
    target = min(tol, 1e-13)
    big_n = max(0, math.ceil((1.0 / (30.0 * target)) ** 0.2 - a))
    m = big_n + a
    head = math.fsum(1.0 / (n + a) ** 2 for n in range(big_n - 1, -1, -1))
    corr = 1.0 / m + 0.5 / m**2 + 1.0 / (6.0 * m**3)
    val = head + corr
    remainder = 1.0 / (30.0 * m**5)
    return FnEval(val, remainder + 4 * EPS * val, big_n)


def lerch_phi(z: float, s: int, a: float, tol: float = 1e-16) -> FnEval:
    """Lerch transcendent Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s for s in {1, 2}.

    Requires a > 0 and either |z| < 1 or (z = 1, s = 2). ``tol`` is a
    relative target for the truncation tail.
    """
    z = float(z)
    a = float(a)
    if s not in (1, 2):
        raise DomainError(f"lerch_phi supports s in {{1, 2}}, got {s}")
    if not a > 0.0:
        raise DomainError(f"lerch_phi requires a > 0, got {a}")
    if z == 1.0:
        if s == 1:
            raise DivergenceError("Phi(1, 1, a) diverges")
        return _hurwitz_zeta2(a, tol)
    if abs(z) >= 1.0:
        raise DomainError(f"lerch_phi requires |z| < 1 or z = 1, got {z}")
    az = abs(z)
    terms = []
    running = 0.0
    p = 1.0
    n = 0
    while True:
        t = p / (n + a) ** s
        terms.append(t)
        running += t
        p *= z
        n += 1
        # later terms: |z|^m / (m+a)^s <= |z|^n / (n+a)^s * |z|^(m-n)
        tail = abs(p) / (n + a) ** s / (1.0 - az)
        if tail <= tol * abs(running):
            break
        if n >= MAX_TERMS:
            raise NoConvergence(f"lerch_phi({z}, {s}, {a}) did not converge")
    val = math.fsum(terms)
    abs_s = math.fsum(abs(t) for t in terms)
    return FnEval(val, tail + _rounding(n, abs_s), n)


def bessel_i0(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """I_0(z) = sum (z^2/4)^n / (n!)^2."""
    z = float(z)
    q = z * z / 4.0
    t = 1.0
    s = 1.0
    n = 0
    while True:
        n += 1
        t *= q / (n * n)
        s += t
        r = q / ((n + 2) * (n + 2))
        if r < 1.0:
            tail = t * q / ((n + 1) * (n + 1)) / (1.0 - r)
            if tail <= rtol * s:
                break
        if n >= MAX_TERMS:
            raise NoConvergence(f"bessel_i0({z}) did not converge")
    return FnEval(s, tail + _rounding(n, s), n)


def bessel_i1(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """I_1(z) = (z/2) sum (z^2/4)^n / (n! (n+1)!)."""
    z = float(z)
    if z == 0.0:
        return FnEval(0.0, 0.0, 0)
    q = z * z / 4.0
    t = 1.0
    s = 1.0
    n = 0
    while True:
        n += 1
        t *= q / (n * (n + 1))
        s += t
        r = q / ((n + 2) * (n + 3))
        if r < 1.0:
            tail = t * q / ((n + 1) * (n + 2)) / (1.0 - r)
            if tail <= rtol * s:
                break
        if n >= MAX_TERMS:
            raise NoConvergence(f"bessel_i1({z}) did not converge")
    half = z / 2.0
    return FnEval(half * s, abs(half) * (tail + _rounding(n, s)), n)


def _struve(z: float, nu: int, rtol: float) -> FnEval:
    # L_nu(z) = sum_m (z/2)^(2m+nu+1) / (Gamma(m+3/2) Gamma(m+nu+3/2))
    # Gamma(m+3/2) = (2m+1)!! sqrt(pi) / 2^(m+1): the ladder below steps it.
    z = float(z)
    if z == 0.0:
        return FnEval(0.0, 0.0, 0)
    h = z / 2.0
    q = h * h
    gamma_32 = math.sqrt(math.pi) / 2.0
    gamma_nu = gamma_32 if nu == 0 else 1.5 * gamma_32
    t = h ** (nu + 1) / (gamma_32 * gamma_nu)
    s = t
    abs_s = abs(t)
    m = 0
    while True:
        t *= q / ((m + 1.5) * (m + nu + 1.5))
        m += 1
        s += t
        abs_s += abs(t)
        r = q / ((m + 1.5) * (m + nu + 1.5))
        if r < 1.0:
            tail = abs(t) * r / (1.0 - r)
            if tail <= rtol * abs(s):
                break
        if m >= MAX_TERMS:
            raise NoConvergence(f"struve L_{nu}({z}) did not converge")
    return FnEval(s, tail + _rounding(m, abs_s), m)


def struve_l0(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """Modified Struve function L_0."""
    return _struve(z, 0, rtol)


def struve_l1(z: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """Modified Struve function L_1."""
    return _struve(z, 1, rtol)


def int_i0(y: float, rtol: float = DEFAULT_RTOL) -> FnEval:
    """Integral of I_0 over [0, y], summed termwise: y^(2n+1) / (4^n (n!)^2 (2n+1))."""
    y = float(y)
    if y == 0.0:
        return FnEval(0.0, 0.0, 0)
    q = y * y / 4.0
    c = 1.0  # q^n / (n!)^2
    s = 1.0
    n = 0
    while True:
        n += 1
        c *= q / (n * n)
        s += c / (2 * n + 1)
        r = q / ((n + 2) * (n + 2))
        if r < 1.0:
            tail = c * q / ((n + 1) * (n + 1)) / (2 * n + 3) / (1.0 - r)
            if tail <= rtol * s:
                break
        if n >= MAX_TERMS:
            raise NoConvergence(f"int_i0({y}) did not converge")
    return FnEval(y * s, abs(y) * (tail + _rounding(n, s)), n)
