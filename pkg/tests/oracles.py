"""Slow, independent reference computations used only by the tests."""
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm, prod


def trial_factor(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _det(m):
    # Laplace expansion, fine for the tiny matrices used here
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def determinantal_divisors_snf(m):
    """SNF diagonal via d_k = D_k / D_(k-1), D_k = gcd of all k x k minors."""
    rows, cols = len(m), len(m[0])
    D = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        D.append(g)
    return [D[k] // D[k - 1] for k in range(1, len(D))]


def milnor_orlik_fraction(w, d):
    """Direct subset sum with Fractions and itertools."""
    n = len(w)
    u = [Fraction(d, x).numerator for x in w]
    total = Fraction(0)
    for size in range(n + 1):
        for I in combinations(range(n), size):
            num = prod((Fraction(d, w[i]) for i in I), start=Fraction(1))
            den = lcm(*[u[i] for i in I]) if I else 1
            total += (-1) ** (n - size) * num / den
    return total


def weights_by_linear_solve(a):
    """Solve a_i v_i + v_(i+1) = 1 with Fraction Gaussian elimination, then clear denominators."""
    n = len(a)
    m = [[Fraction(0)] * n + [Fraction(1)] for _ in range(n)]
    for i in range(n):
        m[i][i] += a[i]
        m[i][(i + 1) % n] += 1
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    v = [m[i][n] / m[i][i] for i in range(n)]
    den = lcm(*[x.denominator for x in v])
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints + [den]:
        g = gcd(g, x)
    return [x // g for x in ints], den // g


def lens_orbit_bfs(p, q):
    seen, todo = set(), [q % p]
    while todo:
        x = todo.pop()
        if x in seen:
            continue
        seen.add(x)
        todo += [pow(x, -1, p), p - x]
    return seen
