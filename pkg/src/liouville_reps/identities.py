"""Both sides of every summation identity the package verifies.

The f-parametric identities sum f(a-b) - f(a+b) over a quadruple set for
an even function f and equate that with divisor-level data:

* ``theorem_1a``   over Bprime(n), any n >= 2,
* ``theorem_1b``   over Oprime(n), even n,
* ``williams_t11`` over B(n), any n >= 1 (the set is empty at n = 1).

Specializing f = x^(2k) collapses the left side to binomial-weighted
moments a^i b^j with i + j = 2k, j odd; those are ``lemma_21a`` (over
Bprime) and ``lemma_21b`` (over Oprime). The published closed form for
the Oprime case is off by a factor of two; ``lemma_21b`` therefore
reports both candidate right-hand sides instead of silently picking one.

Left sides are computed by literal enumeration, right sides by formula,
everything in exact arithmetic, so ``match`` means exact equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Sequence, Union

from .arith import divisors, euler_phi, factorize, sigma_m
from .formulas import lemma_21a_rhs
from .rep_sets import enumerate_set

__all__ = [
    "EvenFunction",
    "IdentitySide",
    "ErratumCheck",
    "theorem_1a",
    "theorem_1b",
    "williams_t11",
    "lemma_21a",
    "lemma_21b",
    "odd_moment_sum",
    "convolution_sigma3_sigma",
    "random_even_tables",
]

Value = Union[int, Fraction]


class EvenFunction:
    """Even function on the integers with exact rational (or integer) values.

    Three flavors cover everything the sweeps need: monomials x^(2k),
    even polynomials with rational coefficients, and value tables indexed
    by |x|. Evaluation at -t reads the value at t, so evenness is
    structural rather than checked at runtime. Table functions know their
    bound and refuse arguments beyond it.
    """

    def __init__(
        self,
        label: str,
        evaluate: Callable[[int], Value],
        bound: int | None = None,
    ):
        self.label = label
        self.bound = bound
        self._evaluate = evaluate

    @classmethod
    def monomial(cls, k: int) -> "EvenFunction":
        """x^(2k) for k >= 1."""
        if k < 1:
            raise ValueError("monomial half-exponent k must be >= 1")
        return cls(f"x^{2 * k}", lambda t, e=2 * k: t**e)

    @classmethod
    def polynomial(cls, coeffs: Sequence[Value]) -> "EvenFunction":
        """Even polynomial: coeffs[i] multiplies x^(2i)."""
        cs = tuple(coeffs)
        label = "poly[" + ",".join(str(c) for c in cs) + "]"
        return cls(label, lambda t: sum(c * t ** (2 * i) for i, c in enumerate(cs)))

    @classmethod
    def constant(cls, c: Value) -> "EvenFunction":
        return cls(f"const[{c}]", lambda t: c)

    @classmethod
    def table(cls, values: Sequence[Value], label: str | None = None) -> "EvenFunction":
        """Value table indexed by |x|; defined for |x| <= len(values) - 1."""
        vals = tuple(values)
        if not vals:
            raise ValueError("table needs at least the value at 0")
        return cls(
            label or f"table[0..{len(vals) - 1}]",
            lambda t: vals[abs(t)],
            bound=len(vals) - 1,
        )

    def __call__(self, t: int) -> Value:
        if self.bound is not None and abs(t) > self.bound:
            raise ValueError(
                f"{self.label} is defined for |x| <= {self.bound}, got {t}"
            )
        return self._evaluate(t)

    def require_bound(self, needed: int) -> None:
        """Reject table functions that cannot cover |x| <= needed."""
        if self.bound is not None and self.bound < needed:
            raise ValueError(
                f"{self.label} covers |x| <= {self.bound}, "
                f"but this identity needs |x| <= {needed}"
            )

    def __repr__(self) -> str:
        return f"EvenFunction({self.label})"


@dataclass(frozen=True)
class IdentitySide:
    """One identity instance: both sides, exactly evaluated."""

    identity: str
    n: int
    param: str
    lhs: Value
    rhs: Value

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ErratumCheck:
    """Enumerated LHS against both closed-form candidates for the odd-set moments."""

    identity: str
    n: int
    k: int
    lhs: int
    rhs_paper: int      # published form: n^(2k) * phi(n)
    rhs_corrected: int  # half of it, as the even-function identity implies

    @property
    def matches_paper(self) -> bool:
        return self.lhs == self.rhs_paper

    @property
    def matches_corrected(self) -> bool:
        return self.lhs == self.rhs_corrected

    @property
    def verdict(self) -> str:
        if self.matches_corrected:
            return "corrected"
        if self.matches_paper:
            return "paper"
        return "neither"


def _difference_sum(n: int, kind: str, f: EvenFunction) -> Value:
    return sum(f(a - b) - f(a + b) for a, b, _x, _y in enumerate_set(n, kind))


def theorem_1a(n: int, f: EvenFunction) -> IdentitySide:
    """Even-function sum over Bprime(n) against its totient form.

    LHS: sum of f(a-b) - f(a+b) over the set.
    RHS: (f(0) + 2 f(1) - f(n)) phi(n) - 2 sum f(l) over l < n coprime to n.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    f.require_bound(n)
    lhs = _difference_sum(n, "Bprime", f)
    rhs = (f(0) + 2 * f(1) - f(n)) * euler_phi(factorize(n)) - 2 * sum(
        f(l) for l in range(1, n) if gcd(l, n) == 1
    )
    return IdentitySide("thm11a", n, f"f={f.label}", lhs, rhs)


def theorem_1b(n: int, f: EvenFunction) -> IdentitySide:
    """Even-function sum over Oprime(n): RHS is just (f(0) - f(n)) phi(n)."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    f.require_bound(n)
    lhs = _difference_sum(n, "Oprime", f)
    rhs = (f(0) - f(n)) * euler_phi(factorize(n))
    return IdentitySide("thm11b", n, f"f={f.label}", lhs, rhs)


def williams_t11(n: int, f: EvenFunction) -> IdentitySide:
    """Even-function sum over the unrestricted set B(n), valid from n = 1.

    RHS: f(0) (sigma(n) - d(n)) + sum_{d|n} (1 + 2n/d - d) f(d)
         - 2 sum_{d|n} sum_{l=1}^{d} f(l).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    f.require_bound(n)
    lhs = 0 if n == 1 else _difference_sum(n, "B", f)
    fz = factorize(n)
    ds = list(divisors(fz))
    rhs = (
        f(0) * (sigma_m(fz, 1) - sigma_m(fz, 0))
        + sum((1 + 2 * (n // d) - d) * f(d) for d in ds)
        - 2 * sum(f(l) for d in ds for l in range(1, d + 1))
    )
    return IdentitySide("williams-t11", n, f"f={f.label}", lhs, rhs)


def odd_moment_sum(n: int, kind: str, k: int) -> int:
    """sum_{s=0}^{k-1} C(2k, 2s+1) * sum over the set of a^(2k-2s-1) b^(2s+1)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    terms = [(comb(2 * k, 2 * s + 1), 2 * k - 2 * s - 1, 2 * s + 1) for s in range(k)]
    total = 0
    for a, b, _x, _y in enumerate_set(n, kind):
        for c, i, j in terms:
            total += c * a**i * b**j
    return total


def lemma_21a(n: int, k: int) -> IdentitySide:
    """Odd-binomial moment sum over Bprime(n) against its closed RHS."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    lhs = odd_moment_sum(n, "Bprime", k)
    rhs = lemma_21a_rhs(n, k)
    return IdentitySide("lemma21a", n, f"k={k}", lhs, rhs)


def lemma_21b(n: int, k: int) -> ErratumCheck:
    """Odd-binomial moment sum over Oprime(n) against BOTH candidate RHS values.

    The published closed form is n^(2k) phi(n); specializing the
    even-function identity to f = x^(2k) gives half that, and the
    enumerated LHS decides. Both values are returned so the discrepancy
    is documented rather than silently patched.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    lhs = odd_moment_sum(n, "Oprime", k)
    stated = n ** (2 * k) * euler_phi(factorize(n))
    # n is even, so the halved candidate is still an integer
    return ErratumCheck("lemma21b", n, k, lhs, stated, stated // 2)


def convolution_sigma3_sigma(n: int) -> int:
    """sum_{m=1}^{n-1} sigma_3(m) * sigma_1(n - m), evaluated literally."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return sum(
        sigma_m(factorize(m), 3) * sigma_m(factorize(n - m), 1)
        for m in range(1, n)
    )


def random_even_tables(
    n: int, count: int, seed: int, low: int = -9, high: int = 9
) -> list[EvenFunction]:
    """Deterministic batch of table-valued even functions covering |x| <= n.

    The RNG is keyed on (seed, n) so a sweep over n with one seed is
    reproducible record by record.
    """
    rng = random.Random(seed * 1_000_003 + n)
    return [
        EvenFunction.table(
            [rng.randint(low, high) for _ in range(n + 1)], label=f"table:{i}"
        )
        for i in range(count)
    ]
