from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from f1zeta import arith
from f1zeta.errors import DomainError
from f1zeta.oracle import lyndon_count


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_moebius(n):
    # squarefree check and prime count by plain trial division
    primes = 0
    d = 2
    while n > 1:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            primes += 1
        d += 1
    return -1 if primes % 2 else 1


@pytest.mark.parametrize("n, mu", [(1, 1), (12, 0), (30, -1)])
def test_moebius_examples(n, mu):
    assert arith.moebius(n) == mu


@pytest.mark.parametrize("n, divs", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, divs):
    assert arith.divisors(n) == divs


@pytest.mark.parametrize("fn", [arith.moebius, arith.divisors])
def test_zero_is_domain_error(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_envelope():
    with pytest.raises(DomainError):
        arith.moebius(arith.MAX_N + 1)
    assert arith.moebius(arith.MAX_N) == 0


@pytest.mark.parametrize("a, n, value", [(1, 3, 0), (-1, 2, 1), (2, 6, 9)])
def test_kappa_examples(a, n, value):
    assert arith.kappa(a, n) == value


def test_kappa_2_6_matches_lyndon_oracle():
    assert lyndon_count(2, 6) == arith.kappa(2, 6) == (2**6 - 2**3 - 2**2 + 2) // 6


@pytest.mark.parametrize("a, n_max, table", [
    (0, 5, [0, 0, 0, 0, 0]),
    (-1, 4, [-1, 1, 0, 0]),
    (2, 4, [2, 1, 2, 3]),
])
def test_kappa_table_examples(a, n_max, table):
    assert arith.kappa_table(a, n_max) == table


def test_moebius_table_matches_naive():
    assert arith.moebius_table(300)[1:] == [naive_moebius(n) for n in range(1, 301)]


@given(st.integers(1, 5000))
def test_moebius_and_divisors_vs_naive(n):
    assert arith.moebius(n) == naive_moebius(n)
    assert arith.divisors(n) == naive_divisors(n)


@given(st.integers(1, 10**7))
def test_factorize_reconstructs(n):
    prod = 1
    for p, e in arith.factorize(n).items():
        assert all(p % d for d in range(2, int(p**0.5) + 1))
        prod *= p**e
    assert prod == n


@given(st.integers(-50, 50), st.integers(1, 120))
def test_kappa_table_agrees_with_kappa(a, n):
    assert arith.kappa_table(a, n)[-1] == arith.kappa(a, n)


@given(st.integers(-20, 20), st.integers(1, 100))
def test_moebius_inversion(a, m):
    assert sum(n * arith.kappa(a, n) for n in arith.divisors(m)) == a**m


@given(st.integers(0, 30), st.integers(1, 60))
def test_growth_bound(a, n):
    k = arith.kappa(a, n)
    assert n * abs(Fraction(k) - Fraction(a**n, n)) <= a ** (n // 2 + 1)


@given(st.integers(2, 40), st.integers(1, 60))
def test_sign_pattern_negative_a(a, n):
    k = arith.kappa(-a, n)
    assert (k > 0) if n % 2 == 0 else (k < 0)


@given(st.integers(1, 200))
def test_small_a_patterns(n):
    assert arith.kappa(-1, n) == {1: -1, 2: 1}.get(n, 0)
    assert arith.kappa(1, n) == (1 if n == 1 else 0)
    assert arith.kappa(0, n) == 0
