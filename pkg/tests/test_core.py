import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from exotic_series.core import exp_remainder, integral_repr, ode_residual, scaled_tail, sum_series
from exotic_series.errors import DomainError, NoConvergence
from exotic_series.families import (
    bernoulli_family,
    bernoulli_genfn,
    binomial_family,
    binomial_genfn,
    exppoly_family,
    exppoly_genfn,
    factorial_family,
    factorial_genfn,
    harmonic_family,
    harmonic_genfn,
    ones,
    exp_genfn,
    stirling_family,
    stirling_genfn,
)


def _mp_remainder(n, y):
    with mpmath.workdps(400):
        y = mpmath.mpf(y)
        return mpmath.exp(y) - sum(y**k / mpmath.factorial(k) for k in range(n + 1))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 25, 60, 150])
@pytest.mark.parametrize("y", [-30.0, -5.0, -1.0, -1e-3, 1e-3, 0.5, 2.0, 12.0])
def test_exp_remainder_vs_mpmath(n, y):
    ref = _mp_remainder(n, y)
    r = exp_remainder(n, y)
    assert abs(r.value - float(ref)) <= 1e-14 * abs(float(ref)) + 5e-324
    assert abs(mpmath.mpf(r.value) - ref) <= r.abs_error_bound


def test_exp_remainder_zero():
    assert exp_remainder(7, 0.0).value == 0.0
    with pytest.raises(ValueError):
        exp_remainder(-1, 1.0)


@settings(max_examples=200)
@given(st.integers(0, 80), st.floats(-40, 40, allow_nan=False))
def test_link_invariant(n, y):
    # E_n(y) = E_{n+1}(y) + y^(n+1)/(n+1)!
    a = exp_remainder(n, y)
    b = exp_remainder(n + 1, y)
    step = 1.0
    for k in range(1, n + 2):
        step *= y / k
    slack = 4 * (a.abs_error_bound + b.abs_error_bound) + 4e-16 * abs(a.value) + 5e-324
    assert abs(a.value - (b.value + step)) <= slack


@given(st.integers(0, 60), st.floats(1e-6, 50))
def test_positive_for_positive_y(n, y):
    v = exp_remainder(n, y).value
    # zero only through underflow of y^(n+1)/(n+1)!
    log_true = (n + 1) * math.log(y) - math.lgamma(n + 2)
    assert v > 0 or log_true < math.log(5e-324)


@pytest.mark.parametrize("n", range(41))
def test_remainder_bound(n):
    for y in (-5.0, -3.3, -1.0, -0.2, 0.2, 1.0, 2.7, 5.0):
        bound = abs(y) ** (n + 1) * math.exp(abs(y)) / math.factorial(n + 1)
        assert abs(exp_remainder(n, y).value) <= bound


def test_scaled_tail_leading_term():
    s, err, terms = scaled_tail(9, 0.0)
    assert s == pytest.approx(0.1) and err == 0.0 and terms == 1


@pytest.mark.parametrize(
    "family,genfn,x,y",
    [
        (ones(), exp_genfn(), 1.0, 0.7),
        (ones(), exp_genfn(), -2.0, 1.3),
        (binomial_family(2), binomial_genfn(2), 0.5, 1.0),
        (stirling_family(3), stirling_genfn(3), 0.8, -0.6),
        (harmonic_family(), harmonic_genfn(), 1.0, 0.9),
        (harmonic_family(), harmonic_genfn(), -1.0, 1.5),
        (bernoulli_family(), bernoulli_genfn(), 1.0, 1.2),
        (exppoly_family(1.0), exppoly_genfn(1.0), -1.0, 0.5),
        (factorial_family(), factorial_genfn(), 0.5, 0.8),
        (factorial_family(), factorial_genfn(), -0.3, -1.1),
    ],
)
def test_ode_residual_second_order(family, genfn, x, y):
    r1 = ode_residual(family, genfn, x, y, 0.02)
    r2 = ode_residual(family, genfn, x, y, 0.01)
    assert 3.0 <= r1 / r2 <= 5.0


@pytest.mark.parametrize("x,y", [(0.3, 0.9), (-1.0, 2.0), (2.0, -1.5), (0.0, 3.0)])
def test_series_matches_quadrature(x, y):
    s = sum_series(ones(), x, y)
    q = integral_repr(exp_genfn(), x, y)
    assert abs(s.value - q.value) <= 1e-12 * max(1.0, abs(s.value))


def test_zero_y_and_zero_x():
    assert sum_series(harmonic_family(), 0.7, 0.0).value == 0.0
    # x = 0 keeps only the n = 0 term a_0 E_0(y)
    assert sum_series(ones(), 0.0, 1.0).value == pytest.approx(math.e - 1, rel=1e-15)


def test_finite_support_family_stops():
    r = sum_series(stirling_family(0), 2.0, 1.0)
    assert r.terms == 1
    assert r.value == pytest.approx(math.e - 1, rel=1e-15)


def test_outside_radius():
    with pytest.raises(DomainError):
        sum_series(factorial_family(), 2.0, 0.75)
    with pytest.raises(DomainError):
        sum_series(bernoulli_family(), 2.0, 4.0)
    with pytest.raises(DomainError):
        integral_repr(factorial_genfn(), 2.0, 0.75)


def test_boundary_needs_conditional():
    with pytest.raises(DomainError):
        sum_series(factorial_family(), 1.0, 1.0)
    # same-sign terms on the boundary do not converge
    with pytest.raises(NoConvergence):
        sum_series(factorial_family(), 1.0, 1.0, conditional=True)


def test_boundary_alternating_conditional():
    r = sum_series(factorial_family(), -1.0, 1.0, conditional=True)
    # u(-1, 1) = e * int_0^1 e^{-t} / (1 + t) dt
    ref = math.e * float(mpmath.quad(lambda t: mpmath.exp(-t) / (1 + t), [0, 1]))
    assert abs(r.value - ref) <= r.abs_error_bound
    assert r.abs_error_bound < 1e-10


def test_cancellation_resummed():
    # terms reach ~1e16 while the sum is ~8.5
    r = sum_series(exppoly_family(2.0), -1.0, 3.0)
    ref = math.exp(3.0) / 2.0 * -math.expm1(2.0 * math.expm1(-3.0))
    assert abs(r.value - ref) <= 1e-12
    assert r.abs_error_bound < 1e-12


def test_start_index():
    full = sum_series(ones(), 1.0, 1.0).value
    tail = sum_series(ones(), 1.0, 1.0, start=1).value
    assert full - tail == pytest.approx(math.e - 1, rel=1e-14)
