"""Exact integer and rational helpers.

Python ints are the big-integer type and :class:`fractions.Fraction` is the
rational type (always in lowest terms, positive denominator).  This module adds
what the standard library lacks: extended gcd, primality and factorization,
Bareiss determinants and Smith normal form.
"""
from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Sequence

from .errors import InputError

IntMatrix = Sequence[Sequence[int]]

# Deterministic witness set for every n < 3.3e24; a probable-prime test beyond.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``s*a + t*b == g``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_s, old_t


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a // gcd(a, b) * b)


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for every n below ~3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_TRIAL_LIMIT = 10_000


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"no factor found for {n}")  # pragma: no cover


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization: trial division by small primes, a Miller-Rabin
    check on the cofactor, and Pollard-Brent rho for composite cofactors.

    >>> factorize(126)
    [(2, 1), (3, 2), (7, 1)]
    """
    if n <= 0:
        raise InputError(f"factorize needs n >= 1, got {n}")
    counts: dict[int, int] = {}
    p = 2
    while p < _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            n //= p
            counts[p] = counts.get(p, 0) + 1
        p = 3 if p == 2 else p + 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
        else:
            f = _pollard_brent(m)
            stack += [f, m // f]
    return sorted(counts.items())


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _check_matrix(m: IntMatrix) -> list[list[int]]:
    rows = [list(r) for r in m]
    if not rows or not rows[0]:
        raise InputError("matrix must have at least one row and one column")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InputError("matrix rows must all have the same length")
    return rows


def determinant(m: IntMatrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = _check_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise InputError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class SmithForm(NamedTuple):
    diag: list[int]
    rank: int
    cols: int

    @property
    def torsion(self) -> list[int]:
        """Invariant factors greater than one."""
        return [d for d in self.diag if d > 1]

    @property
    def free_rank(self) -> int:
        return self.cols - self.rank

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    The returned entries are positive and each divides the next.  The cokernel
    of ``m`` (as a map ``Z^cols -> Z^rows`` acting on columns, i.e. the group
    presented by the rows as relations) is ``sum Z/d_i + Z^(cols - rank)``.
    """
    a = _check_matrix(m)
    nr, nc = len(a), len(a[0])
    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = True
        for i in range(t + 1, nr):
            q = a[i][t] // a[t][t]
            if q:
                for j in range(t, nc):
                    a[i][j] -= q * a[t][j]
            if a[i][t]:
                done = False
        for j in range(t + 1, nc):
            q = a[t][j] // a[t][t]
            if q:
                for i in range(t, nr):
                    a[i][j] -= q * a[i][t]
            if a[t][j]:
                done = False
        if not done:
            continue  # a smaller remainder now exists; re-pivot
        # pivot must divide every remaining entry
        bad = next(
            (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t]),
            None,
        )
        if bad is not None:
            for j in range(t, nc):
                a[t][j] += a[bad][j]
            continue
        t += 1
    diag = [abs(a[i][i]) for i in range(t)]
    return SmithForm(diag, t, nc)


def format_rational(x: Fraction | int) -> str:
    """``"num/den"``, or just ``"num"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def decimal_string(x: Fraction | int, places: int = 6) -> str:
    """Correctly rounded decimal rendering, for human eyes only."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = max(50, len(str(abs(x.numerator))) + places + 10)
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))
