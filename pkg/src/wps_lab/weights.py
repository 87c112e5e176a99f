"""Cyclic weight systems of the hypersurfaces x1^a1 x2 + ... + xn^an x1 = 0.

For exponents ``a`` the unreduced weights ``W`` and determinant ``D`` solve
``a[i]*W[i] + W[i+1] == D`` (indices mod n).  Dividing by ``wstar = gcd(W)``
gives the well-formed weights ``w`` and degree ``d``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from . import kernels
from .errors import DegenerateSystem, InputError
from .exact import gcd_all


@dataclass(frozen=True)
class ExponentTuple:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 3:
            raise InputError("need at least 3 exponents")
        if any(x < 1 for x in a):
            raise InputError("exponents must be ≥ 1")
        if prod(a) == (-1) ** len(a):
            raise DegenerateSystem(f"product of exponents equals (-1)^n for {a}; determinant is zero")

    @property
    def n(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> int:
        return self.a[i % len(self.a)]


@dataclass(frozen=True)
class WeightSystem:
    exponents: ExponentTuple
    W: tuple[int, ...]
    D: int
    wstar: int
    w: tuple[int, ...]
    d: int

    @property
    def n(self) -> int:
        return self.exponents.n

    @property
    def a(self) -> tuple[int, ...]:
        return self.exponents.a

    def as_dict(self) -> dict:
        return {
            "a": list(self.a),
            "W": list(self.W),
            "D": self.D,
            "wstar": self.wstar,
            "w": list(self.w),
            "d": self.d,
        }


def _as_tuple(t) -> ExponentTuple:
    return t if isinstance(t, ExponentTuple) else ExponentTuple(tuple(t))


def unreduced_weights(a: Sequence[int]) -> list[int]:
    """W_i = sum_j (-1)^(j-1) prod_{l=i+j}^{i+n-1} a_l, built from running products."""
    n = len(a)
    out = []
    for i in range(n):
        s, p = 0, 1
        for j in range(n, 0, -1):
            s += p if (j - 1) % 2 == 0 else -p
            p *= a[(i + j - 1) % n]
        out.append(s)
    return out


def solve_weights(t: ExponentTuple | Sequence[int]) -> WeightSystem:
    """Solve the cyclic system for the given exponents.

    >>> solve_weights((2, 3, 5)).W
    (11, 9, 4)
    """
    t = _as_tuple(t)
    a = t.a
    n = t.n
    W = unreduced_weights(a)
    D = prod(a) + (-1) ** (n - 1)
    wstar = gcd_all(W)
    return WeightSystem(
        exponents=t,
        W=tuple(W),
        D=D,
        wstar=wstar,
        w=tuple(x // wstar for x in W),
        d=D // wstar,
    )


def coefficient_matrix(a: Sequence[int]) -> list[list[int]]:
    """Matrix of the linear system: a_i on the diagonal, 1 at (i, i+1 mod n)."""
    n = len(a)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = a[i]
        m[i][(i + 1) % n] += 1
    return m


@dataclass
class ReducedConditionsReport:
    gcd_W_D: list[int]
    gcd_W_next: list[int]
    gcd_w_d: list[int]
    gcd_w_next: list[int]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "gcd_W_D": self.gcd_W_D,
            "gcd_W_next": self.gcd_W_next,
            "gcd_w_d": self.gcd_w_d,
            "gcd_w_next": self.gcd_w_next,
            "violations": self.violations,
            "ok": self.ok,
        }


def check_reduced_conditions(ws: WeightSystem) -> ReducedConditionsReport:
    """Per-index gcds of the unreduced and reduced systems.

    Both families of identities are theorems, so any entry in ``violations``
    means a bug upstream.
    """
    n = ws.n
    rep = ReducedConditionsReport(
        gcd_W_D=[gcd(ws.W[i], ws.D) for i in range(n)],
        gcd_W_next=[gcd(ws.W[i], ws.W[(i + 1) % n]) for i in range(n)],
        gcd_w_d=[gcd(ws.w[i], ws.d) for i in range(n)],
        gcd_w_next=[gcd(ws.w[i], ws.w[(i + 1) % n]) for i in range(n)],
    )
    for i in range(n):
        lhs = ws.a[i] * ws.W[i] + ws.W[(i + 1) % n]
        if lhs != ws.D:
            rep.violations.append(f"a_{i + 1}*W_{i + 1} + W_{i + 2} = {lhs} != D = {ws.D}")
        if rep.gcd_W_D[i] != ws.wstar:
            rep.violations.append(f"gcd(W_{i + 1}, D) = {rep.gcd_W_D[i]} != wstar = {ws.wstar}")
        if rep.gcd_W_next[i] != ws.wstar:
            rep.violations.append(f"gcd(W_{i + 1}, W_{i + 2}) = {rep.gcd_W_next[i]} != wstar")
        if rep.gcd_w_d[i] != 1:
            rep.violations.append(f"gcd(w_{i + 1}, d) = {rep.gcd_w_d[i]} != 1")
        if rep.gcd_w_next[i] != 1:
            rep.violations.append(f"gcd(w_{i + 1}, w_{i + 2}) = {rep.gcd_w_next[i]} != 1")
    return rep


def n4_coprimality_condition(t: ExponentTuple | Sequence[int]) -> bool:
    """gcd(W_1, D) == 1 for four exponents, equivalently wstar == 1."""
    t = _as_tuple(t)
    if t.n != 4:
        raise InputError("the n = 4 coprimality condition needs exactly 4 exponents")
    ws = solve_weights(t)
    return gcd(ws.W[0], ws.D) == 1


# Lower bounds on the density of wstar == 1 (asymptotic, over all tuples).
SIX_OVER_PI_SQUARED = 6 / math.pi**2
ODD_N_BOUND = Fraction(4, 5)
EVEN_N_BOUND = Fraction(3, 4)


@dataclass
class SurveyResult:
    n: int
    lo: int
    hi: int
    mode: str
    total: int
    wstar_one: int
    all_odd_total: int
    all_odd_all_W_even: int
    seed: int | None = None

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.wstar_one, self.total) if self.total else Fraction(0)

    @property
    def all_odd_even_fraction(self) -> Fraction | None:
        if not self.all_odd_total:
            return None
        return Fraction(self.all_odd_all_W_even, self.all_odd_total)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "range": [self.lo, self.hi],
            "mode": self.mode,
            "seed": self.seed,
            "total": self.total,
            "wstar_one": self.wstar_one,
            "fraction": self.fraction,
            "all_odd_total": self.all_odd_total,
            "all_odd_all_W_even": self.all_odd_all_W_even,
            "reference": {
                "six_over_pi_squared": round(SIX_OVER_PI_SQUARED, 6),
                "odd_n_bound": ODD_N_BOUND,
                "even_n_bound": EVEN_N_BOUND,
            },
        }


def density_survey(
    n: int,
    lo: int,
    hi: int,
    mode: str = "exhaustive",
    *,
    k: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    backend: str | None = None,
) -> SurveyResult:
    """Count tuples in ``[lo, hi]^n`` whose weight system has ``wstar == 1``.

    ``mode="exhaustive"`` visits every tuple; the range is split by first
    coordinate so ``jobs > 1`` fans out without changing the counts.
    ``mode="sample"`` draws ``k`` tuples uniformly with ``random.Random(seed)``.
    """
    if n < 3:
        raise InputError("surveys need n ≥ 3")
    if lo < 2:
        raise InputError("surveys need lo ≥ 2")
    if hi < lo:
        raise InputError("empty range: hi < lo")
    if mode == "exhaustive":
        blocks = [(n, lo, hi, f, f, backend) for f in range(lo, hi + 1)]
        parts = kernels.fan_out(kernels.survey_counts, blocks, jobs)
        total, one, odd, odd_even = (sum(col) for col in zip(*parts))
        return SurveyResult(n, lo, hi, mode, total, one, odd, odd_even)
    if mode == "sample":
        if k is None or k < 1:
            raise InputError("sample mode needs k ≥ 1")
        if seed is None:
            raise InputError("sample mode needs an explicit seed")
        rng = random.Random(seed)
        total = one = odd = odd_even = 0
        for _ in range(k):
            a = [rng.randint(lo, hi) for _ in range(n)]
            ws = solve_weights(a)
            total += 1
            one += ws.wstar == 1
            if all(x % 2 for x in a):
                odd += 1
                odd_even += all(W % 2 == 0 for W in ws.W)
        return SurveyResult(n, lo, hi, mode, total, one, odd, odd_even, seed=seed)
    raise InputError(f"unknown survey mode {mode!r}")
