from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from exotic_series import exact
from exotic_series.polys import (
    PolySpec,
    bell_number,
    derangement_poly,
    exp_poly,
    laguerre,
    laguerre_poly,
    laguerre_recurrence,
)


@pytest.mark.parametrize("p", range(16))
def test_exp_poly_at_one_is_bell(p):
    assert exp_poly(p).exact(1) == bell_number(p)


def test_bell_values():
    assert [bell_number(p) for p in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(21))
def test_derangement_poly_at_one(n):
    assert derangement_poly(n).exact(1) == exact.derangement_number(n)


def test_derangement_poly_coefficients():
    # d_3(x) = 6x^3 - 6x^2 + 3x - 1
    assert derangement_poly(3).coefficients == (-1, 3, -6, 6)


@given(st.integers(0, 12), st.fractions(max_denominator=50).filter(lambda q: abs(q) < 20))
def test_horner_matches_defining_sum(n, x):
    for poly in (exp_poly(n), derangement_poly(n), laguerre_poly(n)):
        assert poly.exact(x) == poly.defining_sum(x)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
@pytest.mark.parametrize("x", [-1.5, 0.0, 0.3, 2.0, 7.5])
def test_laguerre_vs_mpmath_and_recurrence(n, x):
    ref = float(mpmath.laguerre(n, 0, x))
    assert laguerre(n, x) == pytest.approx(ref, rel=1e-12, abs=1e-12)
    assert laguerre_recurrence(n, x) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_laguerre_exact():
    assert laguerre(2, Fraction(1)) == Fraction(-1, 2)
    assert laguerre_poly(3).coefficients[3] == Fraction(-1, factorial(3))


def test_derangement_egf_partial_sums():
    # sum d_n(x) z^n / n! -> e^{-z}/(1 - x z); the tail is bounded by the first
    # omitted term over (1 - |x z|) since term ratios tend to x z
    for x in (-2.0, -1.0, 0.5, 1.0, 2.0):
        for z in (-0.25, 0.1, 0.25):
            if abs(x * z) > 0.5:
                continue
            target = mpmath.e ** (-z) / (1 - x * z)
            s = 0.0
            for n in range(40):
                s += float(derangement_poly(n).exact(Fraction(x))) * z**n / factorial(n)
            nxt = float(derangement_poly(40).exact(Fraction(x))) * z**40 / factorial(40)
            assert abs(s - float(target)) <= abs(nxt) / (1 - abs(x * z)) + 1e-15


def test_coefficient_count_checked():
    with pytest.raises(ValueError):
        PolySpec("laguerre", 2, (Fraction(1),))
