"""Exact integer arithmetic and the classical multiplicative functions.

Everything downstream (power sums, enumeration counts, closed forms) is
built on the functions here, and everything is exact: integers are Python
ints, rationals are `fractions.Fraction`, no float ever appears.
Factorization is plain trial division, which is plenty for the desk-scale
sweeps this package runs (n stays well below 10**7).

Conventions at n = 1: phi(1) = 1, mu(1) = 1, and the product over the
primes dividing 1 is the empty product 1. Bernoulli numbers use the
B_1 = -1/2 convention throughout.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import Iterator

__all__ = [
    "PrimeFactorization",
    "factorize",
    "fact_pow",
    "euler_phi",
    "moebius_mu",
    "divisors",
    "sigma_m",
    "mobius_power_product",
    "bernoulli",
    "binomial",
]

# math.comb is already the exact binomial coefficient with C(n, k) = 0 for k > n
binomial = comb


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """Canonical factorization of n >= 1: strictly increasing primes, exponents >= 1.

    n = 1 is represented by an empty factor tuple.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not _is_prime(p):
                raise ValueError(f"invalid factor entry ({p}, {e}) for n={self.n}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")


@lru_cache(maxsize=None)
def factorize(n: int) -> PrimeFactorization:
    """Factor n >= 1 by trial division. Deterministic; rejects n < 1."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    m = n
    factors: list[tuple[int, int]] = []
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    if e:
        factors.append((2, e))
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2
    if m > 1:
        factors.append((m, 1))
    return PrimeFactorization(n, tuple(factors))


def fact_pow(f: PrimeFactorization, m: int) -> PrimeFactorization:
    """Factorization of n**m for m >= 1, without refactoring the power."""
    if m < 1:
        raise ValueError("exponent must be >= 1")
    if m == 1:
        return f
    return PrimeFactorization(f.n**m, tuple((p, e * m) for p, e in f.factors))


def euler_phi(f: PrimeFactorization) -> int:
    """Euler's totient: the count of 1 <= l <= n coprime to n."""
    result = 1
    for p, e in f.factors:
        result *= p ** (e - 1) * (p - 1)
    return result


def moebius_mu(f: PrimeFactorization) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    if any(e >= 2 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def divisors(f: PrimeFactorization) -> Iterator[int]:
    """Yield every positive divisor of n exactly once, in increasing order."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    yield from sorted(divs)


def sigma_m(f: PrimeFactorization, m: int) -> int:
    """Sum of the m-th powers of the divisors; m = 0 counts them."""
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    result = 1
    for p, e in f.factors:
        if m == 0:
            result *= e + 1
        else:
            result *= sum(p ** (m * i) for i in range(e + 1))
    return result


def mobius_power_product(f: PrimeFactorization, s: int) -> Fraction:
    """prod over primes p | n of (1 - p**s), exactly.

    Equals the Moebius-weighted divisor sum of d**s; rational for s < 0.
    The empty product at n = 1 is 1. s = 0 is rejected (the identity it
    feeds assumes a nonzero exponent).
    """
    if s == 0:
        raise ValueError("s must be a nonzero integer")
    result = Fraction(1)
    for p, _ in f.factors:
        term = Fraction(p**s) if s > 0 else Fraction(1, p**-s)
        result *= 1 - term
    return result


# Memoized Bernoulli numbers, grown on demand. The list is the single
# source of truth for every module; growth is serialized, reads are safe.
_bernoulli_values: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(j: int) -> Fraction:
    """Exact Bernoulli number B_j under the B_1 = -1/2 convention.

    Computed by the recurrence sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1.
    """
    if j < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if j >= len(_bernoulli_values):
        with _bernoulli_lock:
            while len(_bernoulli_values) <= j:
                m = len(_bernoulli_values)
                acc = sum(
                    comb(m + 1, i) * _bernoulli_values[i] for i in range(m)
                )
                _bernoulli_values.append(-acc / (m + 1))
    return _bernoulli_values[j]
