"""Sums of k-th powers of the residues coprime to n, by three routes.

S_k(n) = sum of l**k over 1 <= l < n with gcd(l, n) = 1 is evaluated by

* a literal loop (`direct`), the oracle,
* a Moebius-over-divisors rewrite with the inner power sum done term by
  term (`mobius_power`),
* a Bernoulli/Faulhaber closed form in exact rationals
  (`mobius_bernoulli`), the production route for everything downstream.

All three must agree exactly for every n >= 2, k >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .arith import bernoulli, divisors, factorize, moebius_mu

__all__ = [
    "PowerSumResult",
    "coprime_power_sum_direct",
    "coprime_power_sum_mobius",
    "coprime_power_sum_bernoulli",
]

ROUTES = ("direct", "mobius_power", "mobius_bernoulli")


@dataclass(frozen=True)
class PowerSumResult:
    n: int
    k: int
    value: int
    route: str


def _check_args(n: int, k: int) -> None:
    if n <= 1:
        raise ValueError(f"n must be at least 2, got {n}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def coprime_power_sum_direct(n: int, k: int) -> PowerSumResult:
    """Literal summation over the coprime residues. O(n); oracle only."""
    _check_args(n, k)
    value = sum(l**k for l in range(1, n) if gcd(l, n) == 1)
    return PowerSumResult(n, k, value, "direct")


def coprime_power_sum_mobius(
    n: int, k: int, inner_bound: str = "full"
) -> PowerSumResult:
    """Moebius route: sum_{d|n} mu(d) d**k * (sum of j**k up to n/d).

    `inner_bound` selects how far the inner sum runs: "full" takes
    j = 1 .. n/d, "trimmed" takes j = 1 .. n/d - 1. Both give the same
    total for n >= 2, because the dropped j = n/d terms contribute
    n**k * sum_{d|n} mu(d) = 0.
    """
    _check_args(n, k)
    if inner_bound not in ("full", "trimmed"):
        raise ValueError(f"unknown inner_bound {inner_bound!r}")
    trim = 1 if inner_bound == "trimmed" else 0
    value = 0
    for d in divisors(factorize(n)):
        mu = moebius_mu(factorize(d))
        if mu == 0:
            continue
        top = n // d - trim
        value += mu * d**k * sum(j**k for j in range(1, top + 1))
    return PowerSumResult(n, k, value, "mobius_power")


def coprime_power_sum_bernoulli(n: int, k: int) -> PowerSumResult:
    """Bernoulli/Faulhaber route, exact rationals end to end.

    Evaluates sum_{d|n} mu(d) * d**k/(k+1) * sum_{j=0}^{k} C(k+1, j) B_j
    (n/d)**(k+1-j). The rational parts must cancel; a non-integer total
    means the implementation is broken and raises immediately.
    """
    _check_args(n, k)
    total = Fraction(0)
    for d in divisors(factorize(n)):
        mu = moebius_mu(factorize(d))
        if mu == 0:
            continue
        q = n // d
        inner = sum(
            comb(k + 1, j) * bernoulli(j) * q ** (k + 1 - j)
            for j in range(k + 1)
        )
        total += mu * Fraction(d**k, k + 1) * inner
    if total.denominator != 1 or total < 0:
        raise AssertionError(
            f"Bernoulli route gave a non-integer for n={n}, k={k}: {total}"
        )
    return PowerSumResult(n, k, int(total), "mobius_bernoulli")
