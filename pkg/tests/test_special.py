import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from exotic_series.errors import DivergenceError, DomainError
from exotic_series.quadrature import adaptive_simpson
from exotic_series.special import (
    bessel_i0,
    bessel_i1,
    ein,
    int_i0,
    lerch_phi,
    li2,
    struve_l0,
    struve_l1,
)

mpmath.mp.dps = 40

# computed once with mpmath at 40 digits
FROZEN = {
    "ein(1)": (lambda: ein(1.0), 0.7965995992970531),
    "li2(1/2)": (lambda: li2(0.5), 0.5822405264650125),
    "I0(2)": (lambda: bessel_i0(2.0), 2.279585302336067),
    "I1(1)": (lambda: bessel_i1(1.0), 0.5651591039924850),
    "L0(1)": (lambda: struve_l0(1.0), 0.7102431859378909),
    "L1(1)": (lambda: struve_l1(1.0), 0.2267643810558086),
    "int_i0(1)": (lambda: int_i0(1.0), 1.0865210970235898),
    "phi(0.3,1,1)": (lambda: lerch_phi(0.3, 1, 1.0), 1.1889164797957746),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_values(name):
    fn, ref = FROZEN[name]
    r = fn()
    assert abs(r.value - ref) <= max(1e-15 * abs(ref), r.abs_error_bound + 1e-16)


def _mp_ein(z):
    return mpmath.euler + mpmath.log(abs(z)) - mpmath.ei(-z) if z else mpmath.mpf(0)


@pytest.mark.parametrize("z", [-20.0, -3.0, -0.5, 1e-8, 0.7, 3.0, 12.0, 30.0])
def test_ein_vs_mpmath(z):
    ref = float(_mp_ein(mpmath.mpf(z)))
    r = ein(z)
    assert abs(r.value - ref) <= r.abs_error_bound + 2e-16 * abs(ref)


@pytest.mark.parametrize("z", [-3.0, -2.0, -1.0, -0.25, 0.5, 1.5, 3.0])
def test_ein_series_vs_quadrature(z):
    f = lambda u: -math.expm1(-u) / u if u else 1.0  # noqa: E731
    q = adaptive_simpson(f, 0.0, z, tol=1e-13)
    assert abs(ein(z).value - q.value) <= 1e-10


@pytest.mark.parametrize("z", [-50.0, -3.0, -1.0, -0.6, -0.1, 0.2, 0.5, 0.75, 0.99, 1.0])
def test_li2_vs_mpmath(z):
    ref = float(mpmath.polylog(2, z))
    r = li2(z)
    assert abs(r.value - ref) <= r.abs_error_bound + 4e-16 * abs(ref)


@pytest.mark.parametrize("z", [0.1, 0.25, 0.4, 0.6, 0.9])
def test_li2_reflection(z):
    lhs = li2(z).value + li2(1 - z).value
    rhs = math.pi**2 / 6 - math.log(z) * math.log(1 - z)
    assert abs(lhs - rhs) <= 1e-11


def test_li2_domain():
    assert li2(1.0).value == pytest.approx(math.pi**2 / 6, rel=1e-15)
    with pytest.raises(DomainError):
        li2(1.5)


@pytest.mark.parametrize("z", [-0.95, -0.5, 0.0, 0.3, 0.9])
@pytest.mark.parametrize("a", [0.25, 1.0, 2.5])
@pytest.mark.parametrize("s", [1, 2])
def test_lerch_vs_mpmath(z, s, a):
    ref = float(mpmath.lerchphi(z, s, a))
    r = lerch_phi(z, s, a)
    assert abs(r.value - ref) <= r.abs_error_bound + 1e-15 * abs(ref)


@pytest.mark.parametrize("a", [0.5, 1.0, 3.7])
def test_lerch_hurwitz_at_one(a):
    ref = float(mpmath.zeta(2, a))
    r = lerch_phi(1.0, 2, a)
    assert abs(r.value - ref) <= max(r.abs_error_bound, 1e-13)


@pytest.mark.parametrize("z", [-0.9, -0.3, 0.4, 0.8])
def test_lerch_specializes_to_li2(z):
    assert z * lerch_phi(z, 2, 1.0).value == pytest.approx(li2(z).value, rel=1e-14)


def test_lerch_domain():
    with pytest.raises(DivergenceError):
        lerch_phi(1.0, 1, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(1.2, 2, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(-1.0, 2, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 2, -1.0)


@pytest.mark.parametrize("z", [-15.0, -1.0, 0.0, 0.5, 4.0, 25.0])
def test_bessel_vs_mpmath(z):
    for fn, nu in ((bessel_i0, 0), (bessel_i1, 1)):
        ref = float(mpmath.besseli(nu, z))
        r = fn(z)
        assert abs(r.value - ref) <= r.abs_error_bound + 2e-16 * abs(ref)


@pytest.mark.parametrize("z", [-6.0, -1.0, 0.0, 0.5, 3.0, 10.0])
def test_struve_vs_mpmath(z):
    for fn, nu in ((struve_l0, 0), (struve_l1, 1)):
        ref = float(mpmath.struvel(nu, z))
        r = fn(z)
        assert abs(r.value - ref) <= r.abs_error_bound + 2e-16 * abs(ref)


@pytest.mark.parametrize("y", [-3.0, -0.5, 0.25, 1.0, 4.0])
def test_int_i0_struve_form(y):
    i0, i1 = bessel_i0(y).value, bessel_i1(y).value
    l0, l1 = struve_l0(y).value, struve_l1(y).value
    struve = y * i0 + math.pi * y / 2 * (i0 * l1 - i1 * l0)
    assert int_i0(y).value == pytest.approx(struve, rel=1e-13, abs=1e-15)
    ref = float(mpmath.quad(lambda t: mpmath.besseli(0, t), [0, y]))
    assert int_i0(y).value == pytest.approx(ref, rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.floats(-10, 10, allow_nan=False))
def test_bounds_honored_with_tighter_summation(z):
    # the reported bound must cover the change from a much tighter re-sum
    for fn in (ein, bessel_i0, bessel_i1, struve_l0, struve_l1, int_i0):
        loose, tight = fn(z), fn(z, rtol=1e-30)
        assert abs(loose.value - tight.value) <= loose.abs_error_bound + tight.abs_error_bound
        assert tight.terms_used >= loose.terms_used


@settings(max_examples=40, deadline=None)
@given(st.floats(-0.99, 0.99, allow_nan=False))
def test_li2_bound_honored(z):
    loose, tight = li2(z), li2(z, rtol=1e-30)
    assert abs(loose.value - tight.value) <= loose.abs_error_bound + tight.abs_error_bound
