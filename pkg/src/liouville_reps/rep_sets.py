"""Solution sets of a*x + b*y = n and the nine tuple-counting families.

Four quadruple sets are supported, named by kind:

* ``B``       all quadruples of positive integers with a*x + b*y = n,
* ``Bprime``  those with gcd(a, b) = gcd(x, y) = 1 additionally,
* ``O``       all four entries odd (nonempty only for even n),
* ``Oprime``  odd and coprime-restricted.

On top of the sets sit nine counting families: Gp/Hp/Ip over Bprime,
Jp/Kp/Lp over Oprime, and G/H/I over B. Each family counts tuples whose
first two slots arise from splitting a cube u**3 (or u itself, or a
divisor-scaled version) into ordered pairs, with coprimality constraints
on some splits. Two evaluations are provided:

* ``count_definitional`` walks every split by explicit loops - the
  independent ground truth, with no arithmetic identities anywhere,
* ``count_reduced`` collapses the splits to the weighted sum of u**3 * v
  over the base set.
"""

from __future__ import annotations

from math import gcd
from typing import Callable, Iterator, NamedTuple

from .arith import divisors, fact_pow, factorize

__all__ = [
    "RepQuadruple",
    "SET_KINDS",
    "FAMILIES",
    "enumerate_set",
    "weighted_sum",
    "count_definitional",
    "count_reduced",
]

SET_KINDS = ("B", "Bprime", "O", "Oprime")
FAMILIES = ("Gp", "Hp", "Ip", "Jp", "Kp", "Lp", "G", "H", "I")

_FAMILY_KIND = {
    "Gp": "Bprime",
    "Hp": "Bprime",
    "Ip": "Bprime",
    "Jp": "Oprime",
    "Kp": "Oprime",
    "Lp": "Oprime",
    "G": "B",
    "H": "B",
    "I": "B",
}
# Which split shape the family uses: cube on the left ("G"), cube split
# over divisors on the right ("H"), divisor-scaled coprime splits on both
# sides ("I").
_FAMILY_SHAPE = {
    "Gp": "G", "Jp": "G", "G": "G",
    "Hp": "H", "Kp": "H", "H": "H",
    "Ip": "I", "Lp": "I", "I": "I",
}


class RepQuadruple(NamedTuple):
    a: int
    b: int
    x: int
    y: int


def enumerate_set(n: int, kind: str) -> Iterator[RepQuadruple]:
    """Yield the set's quadruples exactly once, in (a, x, b, y) lexicographic order.

    Odd kinds require even n (an odd*odd + odd*odd sum is even); odd n is
    rejected rather than silently yielding nothing.
    """
    if kind not in SET_KINDS:
        raise ValueError(f"unknown set kind {kind!r}")
    if n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    if kind in ("O", "Oprime") and n % 2:
        raise ValueError(f"set {kind} is defined for even n only, got {n}")
    return _generate(n, kind)


def _generate(n: int, kind: str) -> Iterator[RepQuadruple]:
    odd = kind in ("O", "Oprime")
    coprime = kind in ("Bprime", "Oprime")
    divs = _divisor_table(n - 1)
    step = 2 if odd else 1
    for a in range(1, n, step):
        for x in range(1, (n - 1) // a + 1, step):
            m = n - a * x
            # for odd kinds, n even and a*x odd force m odd, so every
            # divisor pair (b, y) of m is odd automatically
            for b in divs[m]:
                if coprime and gcd(a, b) != 1:
                    continue
                y = m // b
                if coprime and gcd(x, y) != 1:
                    continue
                yield RepQuadruple(a, b, x, y)


def _divisor_table(limit: int) -> list[list[int]]:
    """divs[m] = ascending divisors of m, for 0 <= m <= limit (divs[0] unused)."""
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            divs[multiple].append(d)
    return divs


def weighted_sum(n: int, kind: str, weight: Callable[[int, int], int]) -> int:
    """Sum weight(a, b) over the set's quadruples."""
    return sum(weight(a, b) for a, b, _x, _y in enumerate_set(n, kind))


def _family_kind(n: int, family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown counting family {family!r}")
    if n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    kind = _FAMILY_KIND[family]
    if kind == "Oprime" and n % 2:
        raise ValueError(f"family {family} is defined for even n only, got {n}")
    return kind


def _split_count(total: int) -> int:
    # ordered pairs (a, c) with a >= 0, c >= 1, a + c = total, by explicit loop
    return sum(1 for a in range(total) if total - a >= 1)


def _coprime_split_count(total: int) -> int:
    # ordered pairs (b, d) with b >= 0, d >= 1, b + d = total, gcd(b, d) = 1;
    # gcd(0, d) = d, so b = 0 qualifies exactly when total = 1
    return sum(1 for b in range(total) if gcd(b, total - b) == 1)


def count_definitional(n: int, family: str) -> int:
    """Count the family's tuple set with every split walked by explicit loops.

    This is the oracle: no totient identities, no collapsed weights. The
    cube splits cost about u**3 iterations per quadruple, so keep n
    modest (the CLI caps it at 60 by default).
    """
    kind = _family_kind(n, family)
    shape = _FAMILY_SHAPE[family]
    total = 0
    for u, v, _x, _y in enumerate_set(n, kind):
        if shape == "G":
            left = _split_count(u**3)
            right = _split_count(v)
        elif shape == "H":
            left = _split_count(u)
            right = sum(
                _coprime_split_count(e)
                for e in divisors(fact_pow(factorize(v), 3))
            )
        else:
            left = sum(
                _coprime_split_count(e)
                for e in divisors(fact_pow(factorize(u), 3))
            )
            right = sum(
                _coprime_split_count(f) for f in divisors(factorize(v))
            )
        total += left * right
    return total


def count_reduced(n: int, family: str) -> int:
    """Collapsed form of the family count: sum of u**3 * v over its base set."""
    kind = _family_kind(n, family)
    return weighted_sum(n, kind, lambda a, b: a**3 * b)
