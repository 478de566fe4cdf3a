"""Brute-force reference implementations for the test suite.

Nothing here shares code with the package: quadruple loops, literal
divisor scans, and full tuple-space walks only. Slow on purpose; keep the
arguments tiny.
"""

from math import gcd


def brute_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_phi(n: int) -> int:
    return sum(1 for l in range(1, n + 1) if gcd(l, n) == 1)


def brute_quadruples(n: int, kind: str) -> list[tuple[int, int, int, int]]:
    """All (a, b, x, y) with a*x + b*y = n, filtered by kind, in (a, x, b, y) order."""
    out = []
    for a in range(1, n):
        for b in range(1, n):
            for x in range(1, n):
                for y in range(1, n):
                    if a * x + b * y != n:
                        continue
                    if kind in ("O", "Oprime") and (a * b * x * y) % 2 == 0:
                        continue
                    if kind in ("Bprime", "Oprime") and (
                        gcd(a, b) != 1 or gcd(x, y) != 1
                    ):
                        continue
                    out.append((a, b, x, y))
    out.sort(key=lambda q: (q[0], q[2], q[1], q[3]))
    return out


def _icbrt(m: int) -> int:
    r = round(m ** (1 / 3))
    while r**3 > m:
        r -= 1
    while (r + 1) ** 3 <= m:
        r += 1
    return r


def literal_count(n: int, kind: str, shape: str) -> int:
    """Walk the full definitional tuple space of one counting family.

    `shape` picks which slot carries the cube: "G" splits a cube on the
    left and a plain value on the right, "H" a plain left and a
    divisor-scaled cube right with coprime split, "I" divisor-scaled
    coprime splits on both sides. Exponential in n; only for n <= 4 or so.
    """
    base = set(brute_quadruples(n, kind))
    count = 0
    if shape == "G":
        for a in range(0, n**3):
            for c in range(1, n**3 - a + 1):
                u = _icbrt(a + c)
                if u**3 != a + c:
                    continue
                for b in range(0, n):
                    for d in range(1, n - b + 1):
                        for x in range(1, n):
                            for y in range(1, n):
                                if (u, b + d, x, y) in base:
                                    count += 1
    elif shape == "H":
        for a in range(0, n):
            for c in range(1, n - a + 1):
                for k in range(1, n**3 + 1):
                    for b in range(0, n**3):
                        for d in range(1, n**3 - b + 1):
                            if k * (b + d) > n**3 or gcd(b, d) != 1:
                                continue
                            v = _icbrt(k * (b + d))
                            if v**3 != k * (b + d):
                                continue
                            for x in range(1, n):
                                for y in range(1, n):
                                    if (a + c, v, x, y) in base:
                                        count += 1
    elif shape == "I":
        for k in range(1, n**3 + 1):
            for a in range(0, n**3):
                for c in range(1, n**3 - a + 1):
                    if k * (a + c) > n**3 or gcd(a, c) != 1:
                        continue
                    u = _icbrt(k * (a + c))
                    if u**3 != k * (a + c):
                        continue
                    for l in range(1, n + 1):
                        for b in range(0, n):
                            for d in range(1, n - b + 1):
                                if l * (b + d) > n or gcd(b, d) != 1:
                                    continue
                                for x in range(1, n):
                                    for y in range(1, n):
                                        if (u, l * (b + d), x, y) in base:
                                            count += 1
    else:
        raise ValueError(shape)
    return count
