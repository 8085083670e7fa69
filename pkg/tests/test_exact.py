import threading
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from exotic_series import exact
from exotic_series.polys import bell_number


def test_bernoulli_small():
    assert [exact.bernoulli(n) for n in range(7)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)
    ]
    assert exact.bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("n", range(0, 61))
def test_bernoulli_matches_akiyama_tanigawa(n):
    assert exact.bernoulli(n) == exact.bernoulli_akiyama_tanigawa(n)


def test_odd_bernoulli_vanish():
    assert all(exact.bernoulli(n) == 0 for n in range(3, 80, 2))


def test_stirling2_table():
    assert [exact.stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert exact.stirling2(0, 0) == 1
    assert exact.stirling2(3, 5) == 0


@pytest.mark.parametrize("p", range(9))
@pytest.mark.parametrize("x", range(7))
def test_falling_factorial_expansion(p, x):
    total = sum(
        exact.stirling2(p, k) * (factorial(x) // factorial(x - k) if k <= x else 0)
        for k in range(p + 1)
    )
    assert total == x**p


def test_harmonic():
    assert exact.harmonic(0) == 0
    assert exact.harmonic(4) == Fraction(25, 12)


@pytest.mark.parametrize("n", range(31))
def test_derangement_recurrence_vs_alternating(n):
    assert exact.derangement_number(n) == exact.derangement_alternating(n)


def test_derangement_values():
    assert [exact.derangement_number(n) for n in range(7)] == [1, 0, 1, 2, 9, 44, 265]


def test_catalan_and_central():
    assert [exact.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [exact.central_binomial(n) for n in range(5)] == [1, 2, 6, 20, 70]


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_math(n, k):
    assert exact.binomial(n, k) == comb(n, k)


@given(st.integers(1, 40))
def test_bell_recurrence(n):
    # B_{n} = sum_k C(n-1, k) B_k
    assert bell_number(n) == sum(comb(n - 1, k) * bell_number(k) for k in range(n))


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        exact.bernoulli(-1)


def test_memo_is_thread_safe():
    # fresh high indices from several threads must agree with a serial pass
    ns = list(range(150, 110, -1))
    results = {}

    def work(tid):
        results[tid] = [exact.bernoulli(n) for n in ns] + [exact.harmonic(n + 300) for n in ns]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = results[0]
    assert all(r == first for r in results.values())
    assert first[0] == exact.bernoulli_akiyama_tanigawa(150)
