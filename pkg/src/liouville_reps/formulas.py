"""Closed-form evaluation of the nine counting families.

The primed trio Gp/Hp/Ip shares one quintic formula; the odd trio
Jp/Kp/Lp has two variants - the published n**5/8 form and the halved
n**5/16 form, which is the one brute-force enumeration actually confirms;
the unprimed trio G/H/I is a combination of divisor-power sums. Every
evaluation runs in exact rationals, and the fixed denominators (80, 24,
240, 8, 16) must cancel: a non-integer result raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi, factorize, mobius_power_product, sigma_m
from .power_sums import coprime_power_sum_bernoulli

__all__ = [
    "ClosedFormResult",
    "VARIANTS",
    "theorem_22a",
    "theorem_22b",
    "theorem_31",
    "lemma_21a_rhs",
    "closed_form",
]

VARIANTS = ("paper", "corrected")


@dataclass(frozen=True)
class ClosedFormResult:
    family: str
    n: int
    value: int
    variant: str | None = None  # only meaningful for Jp/Kp/Lp


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"closed forms are defined for n >= 2, got {n}")


def _as_count(value: Fraction, family: str, n: int) -> int:
    if value.denominator != 1 or value < 0:
        raise AssertionError(
            f"closed form for {family} at n={n} is not a nonnegative "
            f"integer: {value}"
        )
    return int(value)


def theorem_22a(n: int) -> ClosedFormResult:
    """Quintic closed form shared by Gp, Hp and Ip:

    (7n^5 - 10n)/80 * prod(1 - 1/p) + n^3/24 * prod(1 - p)
        - n/240 * prod(1 - p^3),

    products over the primes dividing n.
    """
    _require_n(n)
    f = factorize(n)
    value = (
        Fraction(7 * n**5 - 10 * n, 80) * mobius_power_product(f, -1)
        + Fraction(n**3, 24) * mobius_power_product(f, 1)
        - Fraction(n, 240) * mobius_power_product(f, 3)
    )
    return ClosedFormResult("Gp", n, _as_count(value, "Gp", n))


def theorem_22b(n: int, variant: str = "corrected") -> ClosedFormResult:
    """Closed form for Jp, Kp and Lp (even n only), in two variants.

    "paper" is the published form n^5/8 * prod(1 - 1/p); "corrected" is
    half of it, n^5/16 * prod(1 - 1/p) = n^4 * phi(n) / 16, which is the
    value the enumeration oracle confirms on every even n tested.
    """
    _require_n(n)
    if n % 2:
        raise ValueError(f"Jp/Kp/Lp are defined for even n only, got {n}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    denom = 8 if variant == "paper" else 16
    value = Fraction(n**5, denom) * mobius_power_product(factorize(n), -1)
    return ClosedFormResult("Jp", n, _as_count(value, "Jp", n), variant)


def theorem_31(n: int) -> ClosedFormResult:
    """Closed form shared by G, H and I:

    7/80 * sigma_5(n) + (1/24 - n/8) * sigma_3(n) - 1/240 * sigma_1(n).
    """
    _require_n(n)
    f = factorize(n)
    value = (
        Fraction(7, 80) * sigma_m(f, 5)
        + (Fraction(1, 24) - Fraction(n, 8)) * sigma_m(f, 3)
        - Fraction(1, 240) * sigma_m(f, 1)
    )
    return ClosedFormResult("G", n, _as_count(value, "G", n))


def lemma_21a_rhs(n: int, k: int) -> int:
    """Closed right-hand side of the odd-binomial moment identity:

    (n^(2k) - 2)/2 * phi(n) + S_{2k}(n),

    with the coprime power sum taken by the Bernoulli route. The result
    must be an integer; anything else raises.
    """
    _require_n(n)
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    value = Fraction(n ** (2 * k) - 2, 2) * euler_phi(factorize(n))
    value += coprime_power_sum_bernoulli(n, 2 * k).value
    if value.denominator != 1:
        raise AssertionError(
            f"moment identity RHS is not an integer for n={n}, k={k}: {value}"
        )
    return int(value)


def closed_form(family: str, n: int, variant: str | None = None) -> ClosedFormResult:
    """Closed-form value of any of the nine families, relabeled accordingly.

    `variant` applies to Jp/Kp/Lp only (default "corrected" there) and
    must be omitted or None for the other families.
    """
    if family in ("Gp", "Hp", "Ip"):
        if variant is not None:
            raise ValueError(f"family {family} has no variants")
        base = theorem_22a(n)
    elif family in ("Jp", "Kp", "Lp"):
        base = theorem_22b(n, variant if variant is not None else "corrected")
    elif family in ("G", "H", "I"):
        if variant is not None:
            raise ValueError(f"family {family} has no variants")
        base = theorem_31(n)
    else:
        raise ValueError(f"unknown counting family {family!r}")
    return ClosedFormResult(family, base.n, base.value, base.variant)
