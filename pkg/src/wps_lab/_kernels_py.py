"""Pure-Python implementations of the integer kernels.

Same API and results as the compiled ``_kernels`` module; used when the
extension is not built and as the reference side of the benchmark.
"""
from __future__ import annotations

from itertools import product
from math import gcd


def survey_counts(n: int, lo: int, hi: int, first_lo: int, first_hi: int) -> tuple[int, int, int, int]:
    """Count exponent tuples in ``[first_lo, first_hi] x [lo, hi]^(n-1)``.

    Returns ``(total, wstar_one, odd_total, odd_all_w_even)`` where the last
    two count tuples with every exponent odd, and those among them whose
    unreduced weights are all even.  Degenerate tuples are skipped.
    """
    total = wstar_one = odd_total = odd_even = 0
    rest = range(lo, hi + 1)
    for first in range(first_lo, first_hi + 1):
        for tail in product(rest, repeat=n - 1):
            a = (first,) + tail
            prod_a = 1
            for x in a:
                prod_a *= x
            if prod_a == (-1) ** n:
                continue
            g = 0
            all_even = True
            for i in range(n):
                s = 0
                p = 1
                for j in range(n, 0, -1):
                    s += p if (j - 1) % 2 == 0 else -p
                    p *= a[(i + j - 1) % n]
                g = gcd(g, s)
                if s % 2:
                    all_even = False
            total += 1
            if g == 1:
                wstar_one += 1
            if all(x % 2 for x in a):
                odd_total += 1
                if all_even:
                    odd_even += 1
    return total, wstar_one, odd_total, odd_even


def excluded_search(bound: int, u_lo: int, u_hi: int) -> list[tuple[int, int, int, int]]:
    """Solutions of (mu+1)(mv+1) = (m+1)w with gcd(u,v)=1, w < u, u in [u_lo, u_hi]."""
    out = []
    for u in range(u_lo, u_hi + 1):
        for v in range(1, bound + 1):
            if gcd(u, v) != 1:
                continue
            for w in range(1, min(bound, u - 1) + 1):
                for m in range(1, bound + 1):
                    if (m * u + 1) * (m * v + 1) == (m + 1) * w:
                        out.append((u, v, w, m))
    return out
