"""Arithmetic core: factorization, multiplicative functions, Bernoulli numbers."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_divisors, brute_phi
from liouville_reps.arith import (
    PrimeFactorization,
    bernoulli,
    binomial,
    divisors,
    euler_phi,
    fact_pow,
    factorize,
    mobius_power_product,
    moebius_mu,
    sigma_m,
)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(97).factors == ((97, 1),)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-7)


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        PrimeFactorization(12, ((4, 1), (3, 1)))  # 4 is not prime
    with pytest.raises(ValueError):
        PrimeFactorization(12, ((3, 1), (2, 2)))  # not increasing
    with pytest.raises(ValueError):
        PrimeFactorization(10, ((2, 1), (3, 1)))  # wrong product


@given(st.integers(min_value=1, max_value=200_000))
def test_factorize_reconstructs(n):
    f = factorize(n)
    prod = 1
    for p, e in f.factors:
        prod *= p**e
        assert e >= 1
    assert prod == n
    assert (n == 1) == (f.factors == ())


def test_fact_pow():
    assert fact_pow(factorize(12), 3).n == 12**3
    assert fact_pow(factorize(12), 3).factors == ((2, 6), (3, 3))
    assert fact_pow(factorize(1), 5).factors == ()


def test_phi_examples():
    assert euler_phi(factorize(1)) == 1
    assert euler_phi(factorize(2)) == 1
    assert euler_phi(factorize(36)) == 12


def test_phi_matches_coprime_count():
    for n in range(1, 1001):
        assert euler_phi(factorize(n)) == brute_phi(n)


def test_phi_divisor_sum_is_n():
    for n in range(1, 2001):
        assert sum(euler_phi(factorize(d)) for d in divisors(factorize(n))) == n


def test_mu_examples():
    assert moebius_mu(factorize(1)) == 1
    assert moebius_mu(factorize(6)) == 1
    assert moebius_mu(factorize(12)) == 0
    assert moebius_mu(factorize(30)) == -1


def test_mu_divisor_sum_vanishes():
    assert sum(moebius_mu(factorize(d)) for d in divisors(factorize(1))) == 1
    for n in range(2, 2001):
        assert sum(moebius_mu(factorize(d)) for d in divisors(factorize(n))) == 0


@given(
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=500),
)
def test_multiplicativity_sampled(m, n):
    if gcd(m, n) != 1:
        return
    fm, fn, fmn = factorize(m), factorize(n), factorize(m * n)
    assert euler_phi(fmn) == euler_phi(fm) * euler_phi(fn)
    assert moebius_mu(fmn) == moebius_mu(fm) * moebius_mu(fn)
    for k in (0, 1, 3):
        assert sigma_m(fmn, k) == sigma_m(fm, k) * sigma_m(fn, k)


def test_multiplicativity_exhaustive_small():
    for m in range(1, 121):
        for n in range(m, 121):
            if gcd(m, n) != 1:
                continue
            fm, fn, fmn = factorize(m), factorize(n), factorize(m * n)
            assert euler_phi(fmn) == euler_phi(fm) * euler_phi(fn)
            assert moebius_mu(fmn) == moebius_mu(fm) * moebius_mu(fn)
            assert sigma_m(fmn, 1) == sigma_m(fm, 1) * sigma_m(fn, 1)


def test_divisors_examples():
    assert list(divisors(factorize(1))) == [1]
    assert list(divisors(factorize(6))) == [1, 2, 3, 6]
    assert list(divisors(factorize(8))) == [1, 2, 4, 8]


def test_divisors_match_brute_force():
    for n in range(1, 301):
        assert list(divisors(factorize(n))) == brute_divisors(n)


def test_sigma_examples():
    assert sigma_m(factorize(2), 3) == 9
    assert sigma_m(factorize(2), 5) == 33
    assert sigma_m(factorize(6), 1) == 12
    assert sigma_m(factorize(6), 0) == 4


def test_sigma_matches_brute_force():
    for n in range(1, 201):
        ds = brute_divisors(n)
        for m in range(0, 6):
            assert sigma_m(factorize(n), m) == sum(d**m for d in ds)


def test_mobius_power_product_examples():
    assert mobius_power_product(factorize(6), 1) == 2
    assert mobius_power_product(factorize(2), 3) == -7
    assert mobius_power_product(factorize(12), -1) == Fraction(1, 3)
    assert mobius_power_product(factorize(1), 5) == 1


def test_mobius_power_product_equals_weighted_divisor_sum():
    for n in range(1, 501):
        f = factorize(n)
        ds = brute_divisors(n)
        for s in (-3, -1, 1, 3):
            direct = sum(
                moebius_mu(factorize(d)) * Fraction(d) ** s for d in ds
            )
            assert mobius_power_product(f, s) == direct


def test_mobius_power_product_rejects_zero_exponent():
    with pytest.raises(ValueError):
        mobius_power_product(factorize(6), 0)


def test_bernoulli_listed_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(8) == Fraction(-1, 30)


def test_bernoulli_odd_indices_vanish():
    for j in range(3, 41, 2):
        assert bernoulli(j) == 0


def test_bernoulli_recurrence():
    # sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1
    for j in range(1, 41):
        total = sum(binomial(j + 1, i) * bernoulli(i) for i in range(j + 1))
        assert total == 0


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_binomial_examples():
    assert binomial(4, 1) == 4
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
