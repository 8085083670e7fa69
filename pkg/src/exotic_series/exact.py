"""Exact integer-indexed number families as ``Fraction`` values.

Every family here is a coefficient source for the exponential remainder
series. Values stay exact; conversion to float happens in the series engine.
Recurrence-based families keep append-only memo tables guarded by a lock.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial as _ifactorial

__all__ = [
    "bernoulli",
    "bernoulli_akiyama_tanigawa",
    "stirling2",
    "harmonic",
    "derangement_number",
    "derangement_alternating",
    "factorial",
    "binomial",
    "central_binomial",
    "catalan",
]

_lock = threading.RLock()

_bernoulli: list[Fraction] = [Fraction(1)]
_stirling_rows: list[list[int]] = [[1]]
_harmonic: list[Fraction] = [Fraction(0)]
_derangement: list[int] = [1]


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def bernoulli(n: int) -> Fraction:
    """B_n from the EGF z/(e^z - 1), so B_1 = -1/2.

    Uses sum_{k=0}^{m} C(m+1, k) B_k = 0, skipping odd k >= 3 (zero).
    """
    _check_index(n)
    if n < len(_bernoulli):
        return _bernoulli[n]
    with _lock:
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            if m >= 3 and m % 2 == 1:
                _bernoulli.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                if k >= 3 and k % 2 == 1:
                    continue
                acc += comb(m + 1, k) * _bernoulli[k]
            _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """Independent route to B_n via the Akiyama-Tanigawa triangle.

    The triangle produces the B_1 = +1/2 convention; the sign of B_1 is
    flipped to match :func:`bernoulli`. Not memoized, O(n^2).
    """
    _check_index(n)
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return -row[0] if n == 1 else row[0]


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind S(n, k); zero when k > n."""
    _check_index(n)
    _check_index(k, "k")
    if k > n:
        return Fraction(0)
    if n >= len(_stirling_rows):
        with _lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                m = len(_stirling_rows)
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    left = prev[j] if j < m else 0
                    row[j] = j * left + prev[j - 1]
                _stirling_rows.append(row)
    return Fraction(_stirling_rows[n][k])


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n with H_0 = 0."""
    _check_index(n)
    if n >= len(_harmonic):
        with _lock:
            while len(_harmonic) <= n:
                m = len(_harmonic)
                _harmonic.append(_harmonic[-1] + Fraction(1, m))
    return _harmonic[n]


def derangement_number(n: int) -> Fraction:
    """D_n via D_n = n D_{n-1} + (-1)^n, D_0 = 1."""
    _check_index(n)
    if n >= len(_derangement):
        with _lock:
            while len(_derangement) <= n:
                m = len(_derangement)
                _derangement.append(m * _derangement[-1] + (-1) ** m)
    return Fraction(_derangement[n])


def derangement_alternating(n: int) -> Fraction:
    """D_n as n! * sum_{k<=n} (-1)^k / k!, kept as a cross-check route."""
    _check_index(n)
    return _ifactorial(n) * sum(
        (Fraction((-1) ** k, _ifactorial(k)) for k in range(n + 1)), Fraction(0)
    )


def factorial(n: int) -> Fraction:
    _check_index(n)
    return Fraction(_ifactorial(n))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k), zero for k > n."""
    _check_index(n)
    _check_index(k, "k")
    return Fraction(comb(n, k))


def central_binomial(n: int) -> Fraction:
    _check_index(n)
    return Fraction(comb(2 * n, n))


def catalan(n: int) -> Fraction:
    _check_index(n)
    return Fraction(comb(2 * n, n), n + 1)
