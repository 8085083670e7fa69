"""Exponential (Bell), derangement and Laguerre polynomials.

Polynomials are materialized as exact coefficient tuples so the same object
serves exact evaluation at rationals and float evaluation by Horner.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Literal

from .exact import stirling2

__all__ = [
    "PolySpec",
    "exp_poly",
    "derangement_poly",
    "laguerre_poly",
    "laguerre",
    "laguerre_recurrence",
    "bell_number",
]

Family = Literal["exponential", "derangement", "laguerre"]


@dataclass(frozen=True)
class PolySpec:
    """Polynomial with exact coefficients, ``coefficients[k]`` multiplies x^k."""

    family: Family
    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def exact(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def defining_sum(self, x: Fraction | int) -> Fraction:
        """Term-by-term sum c_k x^k, the reference for the Horner path."""
        x = Fraction(x)
        return sum((c * x**k for k, c in enumerate(self.coefficients)), Fraction(0))


def exp_poly(p: int) -> PolySpec:
    """phi_p(x) = sum_k S(p, k) x^k; phi_0 = 1."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return PolySpec("exponential", p, tuple(stirling2(p, k) for k in range(p + 1)))


def derangement_poly(n: int) -> PolySpec:
    """d_n(x) = n! sum_j (-1)^j x^(n-j) / j!, so d_n(1) = D_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    # coefficient of x^m comes from j = n - m
    coeffs = tuple(
        Fraction((-1) ** (n - m) * factorial(n), factorial(n - m)) for m in range(n + 1)
    )
    return PolySpec("derangement", n, coeffs)


def laguerre_poly(n: int) -> PolySpec:
    """L_n(x) = sum_k C(n, k) (-1)^k x^k / k!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = tuple(Fraction((-1) ** k * comb(n, k), factorial(k)) for k in range(n + 1))
    return PolySpec("laguerre", n, coeffs)


def laguerre(n: int, x):
    """L_n(x) from the binomial representation.

    Exact for ``int``/``Fraction`` arguments, float otherwise.
    """
    poly = laguerre_poly(n)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return poly.exact(x)
    return poly(float(x))


def laguerre_recurrence(n: int, x: float) -> float:
    """L_n(x) from (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = 1.0, 1.0 - x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur


def bell_number(p: int) -> Fraction:
    if p < 0:
        raise ValueError("p must be >= 0")
    return sum((stirling2(p, k) for k in range(p + 1)), Fraction(0))
