# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; see ``_kernels_py`` for the reference versions.

All arithmetic is int64.  Callers must check that the inputs cannot overflow
(``kernels.survey_fits_int64``) before calling in.
"""
from libc.stdint cimport int64_t

cdef enum:
    MAXN = 64


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def survey_counts(int n, int64_t lo, int64_t hi, int64_t first_lo, int64_t first_hi):
    cdef int64_t a[MAXN]
    cdef int64_t total = 0, wstar_one = 0, odd_total = 0, odd_even = 0
    cdef int64_t g, s, p, prod_a, unit
    cdef int i, j, k
    cdef bint all_even, all_odd
    if n < 1 or n > MAXN:
        raise ValueError("n out of range for the compiled kernel")
    if first_lo > first_hi or lo > hi:
        return 0, 0, 0, 0
    unit = 1 if n % 2 == 0 else -1
    with nogil:
        a[0] = first_lo
        for i in range(1, n):
            a[i] = lo
        while True:
            prod_a = 1
            all_odd = True
            for i in range(n):
                prod_a *= a[i]
                if a[i] % 2 == 0:
                    all_odd = False
            if prod_a != unit:
                g = 0
                all_even = True
                for i in range(n):
                    s = 0
                    p = 1
                    for j in range(n, 0, -1):
                        if (j - 1) % 2 == 0:
                            s += p
                        else:
                            s -= p
                        p *= a[(i + j - 1) % n]
                    g = _gcd(g, s)
                    if s % 2 != 0:
                        all_even = False
                total += 1
                if g == 1:
                    wstar_one += 1
                if all_odd:
                    odd_total += 1
                    if all_even:
                        odd_even += 1
            # odometer step, last coordinate fastest
            k = n - 1
            while k >= 0:
                a[k] += 1
                if a[k] <= (first_hi if k == 0 else hi):
                    break
                a[k] = first_lo if k == 0 else lo
                k -= 1
            if k < 0:
                break
    return total, wstar_one, odd_total, odd_even


def excluded_search(int64_t bound, int64_t u_lo, int64_t u_hi):
    cdef int64_t u, v, w, m, wmax
    out = []
    for u in range(u_lo, u_hi + 1):
        for v in range(1, bound + 1):
            if _gcd(u, v) != 1:
                continue
            wmax = bound if bound < u - 1 else u - 1
            for w in range(1, wmax + 1):
                for m in range(1, bound + 1):
                    if (m * u + 1) * (m * v + 1) == (m + 1) * w:
                        out.append((u, v, w, m))
    return out
