"""Coefficient families a_n and their exponential generating functions.

Parameterized constructors are cached so each (family, parameter) pair keeps
one float-coefficient cache across evaluations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import exact
from .core import CoeffFamily, GenFn
from .polys import exp_poly
from .special import bessel_i0, bessel_i1, ein

__all__ = [
    "ones",
    "binomial_family",
    "powers_family",
    "bernoulli_family",
    "stirling_family",
    "exppoly_family",
    "harmonic_family",
    "factorial_family",
    "central_binomial_family",
    "catalan_family",
    "inverse_factorial_family",
    "exp_genfn",
    "binomial_genfn",
    "powers_genfn",
    "bernoulli_genfn",
    "stirling_genfn",
    "exppoly_genfn",
    "harmonic_genfn",
    "factorial_genfn",
    "central_binomial_genfn",
    "catalan_genfn",
    "inverse_factorial_genfn",
]

TWO_PI = 2.0 * math.pi


@lru_cache(maxsize=None)
def ones() -> CoeffFamily:
    return CoeffFamily("ones", lambda n: Fraction(1))


@lru_cache(maxsize=None)
def binomial_family(p: int) -> CoeffFamily:
    return CoeffFamily(f"binomial(n,{p})", lambda n: exact.binomial(n, p))


@lru_cache(maxsize=None)
def powers_family(p: int) -> CoeffFamily:
    # 0**0 == 1 matches the 0^0 = 1 convention
    return CoeffFamily(f"n^{p}", lambda n: Fraction(n**p))


@lru_cache(maxsize=None)
def bernoulli_family() -> CoeffFamily:
    return CoeffFamily("bernoulli", exact.bernoulli, TWO_PI)


@lru_cache(maxsize=None)
def stirling_family(k: int) -> CoeffFamily:
    return CoeffFamily(
        f"stirling2(n,{k})", lambda n: exact.stirling2(n, k), last_index=0 if k == 0 else None
    )


@lru_cache(maxsize=None)
def exppoly_family(lam: float) -> CoeffFamily:
    lam_q = Fraction(lam)
    # phi_n(0) = 0 for n >= 1
    return CoeffFamily(
        f"phi_n({lam:g})",
        lambda n: exp_poly(n).exact(lam_q),
        last_index=0 if lam_q == 0 else None,
    )


@lru_cache(maxsize=None)
def harmonic_family() -> CoeffFamily:
    return CoeffFamily("harmonic", exact.harmonic)


@lru_cache(maxsize=None)
def factorial_family() -> CoeffFamily:
    return CoeffFamily("factorial", exact.factorial, 1.0)


@lru_cache(maxsize=None)
def central_binomial_family() -> CoeffFamily:
    return CoeffFamily("central_binomial", exact.central_binomial)


@lru_cache(maxsize=None)
def catalan_family() -> CoeffFamily:
    return CoeffFamily("catalan", exact.catalan)


@lru_cache(maxsize=None)
def inverse_factorial_family() -> CoeffFamily:
    return CoeffFamily("1/n!", lambda n: Fraction(1, math.factorial(n)))


def _bernoulli_egf(z: float) -> float:
    # removable singularity at 0
    return 1.0 if z == 0.0 else z / math.expm1(z)


def _inverse_factorial_egf(z: float) -> float:
    # sum z^n / (n!)^2 = I_0(2 sqrt z) for z >= 0
    if z >= 0.0:
        return bessel_i0(2.0 * math.sqrt(z)).value
    t = s = 1.0
    n = 0
    while True:
        n += 1
        t *= z / (n * n)
        s += t
        if n * n > abs(z) and abs(t) <= 2.0**-56 * abs(s):
            return s


@lru_cache(maxsize=None)
def exp_genfn() -> GenFn:
    return GenFn("exp", math.exp)


@lru_cache(maxsize=None)
def binomial_genfn(p: int) -> GenFn:
    fp = math.factorial(p)
    return GenFn(f"z^{p} e^z / {p}!", lambda z: z**p * math.exp(z) / fp)


@lru_cache(maxsize=None)
def powers_genfn(p: int) -> GenFn:
    phi = exp_poly(p)
    return GenFn(f"phi_{p}(z) e^z", lambda z: phi(z) * math.exp(z))


@lru_cache(maxsize=None)
def bernoulli_genfn() -> GenFn:
    return GenFn("z/(e^z-1)", _bernoulli_egf)


@lru_cache(maxsize=None)
def stirling_genfn(k: int) -> GenFn:
    fk = math.factorial(k)
    return GenFn(f"(e^z-1)^{k}/{k}!", lambda z: math.expm1(z) ** k / fk)


@lru_cache(maxsize=None)
def exppoly_genfn(lam: float) -> GenFn:
    return GenFn(f"exp({lam:g}(e^z-1))", lambda z: math.exp(lam * math.expm1(z)))


@lru_cache(maxsize=None)
def harmonic_genfn() -> GenFn:
    return GenFn("e^z Ein(z)", lambda z: math.exp(z) * ein(z).value)


@lru_cache(maxsize=None)
def factorial_genfn() -> GenFn:
    return GenFn("1/(1-z)", lambda z: 1.0 / (1.0 - z), (-math.inf, 1.0))


@lru_cache(maxsize=None)
def central_binomial_genfn() -> GenFn:
    return GenFn("e^2z I0(2z)", lambda z: math.exp(2 * z) * bessel_i0(2 * z).value)


@lru_cache(maxsize=None)
def catalan_genfn() -> GenFn:
    return GenFn(
        "e^2z (I0(2z) - I1(2z))",
        lambda z: math.exp(2 * z) * (bessel_i0(2 * z).value - bessel_i1(2 * z).value),
    )


@lru_cache(maxsize=None)
def inverse_factorial_genfn() -> GenFn:
    return GenFn("I0(2 sqrt z)", _inverse_factorial_egf)
