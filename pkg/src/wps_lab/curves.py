"""Curves in weighted projective planes: the n = 3 case of the cyclic family."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Sequence

from . import kernels
from .errors import IllFormedWeights, InputError, NonIntegralGenus
from .weights import ExponentTuple, WeightSystem, solve_weights


def _n3(ws_or_t) -> WeightSystem:
    ws = ws_or_t if isinstance(ws_or_t, WeightSystem) else solve_weights(ws_or_t)
    if ws.n != 3:
        raise InputError("curve invariants need exactly 3 exponents")
    return ws


def genus_n3(ws: WeightSystem | Sequence[int]) -> int:
    """Genus (wstar - 1)/2 of the general member of |x^a1 y, y^a2 z, z^a3 x|."""
    ws = _n3(ws)
    if ws.wstar % 2 == 0:
        raise NonIntegralGenus(f"wstar = {ws.wstar} is even")
    return (ws.wstar - 1) // 2


def kodaira_degree_n3(t: ExponentTuple | Sequence[int]) -> int:
    """deg(C + K_P) = (a1-1)(a2-1)(a3-1) - 1; its sign decides the Kodaira dimension."""
    a = t.a if isinstance(t, ExponentTuple) else tuple(t)
    if len(a) != 3:
        raise InputError("the Kodaira degree needs exactly 3 exponents")
    return (a[0] - 1) * (a[1] - 1) * (a[2] - 1) - 1


def adjunction_value(g: int, m: Sequence[int]) -> Fraction:
    """C.(C + K) = 2g - 2 + sum(1 - 1/m_i) for a curve through cyclic points of index m_i."""
    if g < 0 or any(x < 1 for x in m):
        raise InputError("need g ≥ 0 and indices ≥ 1")
    return 2 * g - 2 + sum((1 - Fraction(1, x) for x in m), Fraction(0))


def curve_adjunction_lhs(ws: WeightSystem) -> Fraction:
    """d(d - sum w)/prod w, the left side of adjunction for C in P(w1, w2, w3)."""
    w1, w2, w3 = ws.w
    return Fraction(ws.d * (ws.d - w1 - w2 - w3), w1 * w2 * w3)


@dataclass(frozen=True)
class CurveFamilyTag:
    kind: str  # CoordinateLine | ConicType | CyclicCusp | Unknown
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kind": self.kind, **self.details}


def cusp_weights(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Weights of x^a y + y^b z + z^c x (degree abc + 1 before reduction)."""
    return (b * c - c + 1, c * a - a + 1, a * b - b + 1)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _find_cusp(weights: tuple[int, int, int], d: int):
    """(a, b, c) and rotation with rotated weights == cusp_weights(a, b, c), abc = d - 1."""
    if d < 2:
        return None
    for a in _divisors(d - 1):
        for b in _divisors((d - 1) // a):
            c = (d - 1) // (a * b)
            target = cusp_weights(a, b, c)
            for shift in range(3):
                if weights[shift:] + weights[:shift] == target:
                    return (a, b, c), shift
    return None


def classify_qsrc(u: int, v: int, w: int, d: int) -> CurveFamilyTag:
    """Which family a degree-d quasi-smooth rational curve in P(u, v, w) could belong to.

    Checks are made in order: coordinate line, conic type, cyclic cusp
    (x^a y + y^b z + z^c x with d = abc + 1), and otherwise ``Unknown``.
    Conic type reports membership only; the other monomials of degree d are
    not listed.  When an exponent is 1 the cusp weights also pass one of the
    earlier tests; the labels are then attached as ``cusp_abc``.
    """
    weights = (u, v, w)
    if any(x < 1 for x in weights) or d < 1:
        raise IllFormedWeights("weights and degree must be positive")
    for x, y in ((u, v), (v, w), (u, w)):
        if gcd(x, y) != 1:
            raise IllFormedWeights(f"P({u},{v},{w}) is not well formed: gcd({x},{y}) > 1")
    cusp = _find_cusp(weights, d)
    extra = {"cusp_abc": list(cusp[0]), "cusp_rotation": cusp[1]} if cusp else {}
    for i, x in enumerate(weights):
        if d == x:
            return CurveFamilyTag("CoordinateLine", {"coordinate": i + 1, **extra})
    for k in range(3):
        i, j = [x for x in range(3) if x != k]
        if d == weights[i] + weights[j] and d % weights[k] == 0:
            return CurveFamilyTag(
                "ConicType",
                {"pair": [i + 1, j + 1], "power_coordinate": k + 1, "power": d // weights[k], **extra},
            )
    if cusp:
        return CurveFamilyTag("CyclicCusp", {"abc": list(cusp[0]), "rotation": cusp[1]})
    return CurveFamilyTag("Unknown")


@dataclass
class ExcludedFamilyReport:
    bound: int
    solutions: list[tuple[int, int, int, int]]
    backend: str

    def as_dict(self) -> dict:
        return {
            "bound": self.bound,
            "solutions": [list(s) for s in self.solutions],
            "count": len(self.solutions),
        }


def verify_excluded_family(bound: int, *, jobs: int = 1, backend: str | None = None) -> ExcludedFamilyReport:
    """Search u, v, w, m <= bound for (mu+1)(mv+1) = (m+1)w, gcd(u,v)=1, u >= w+1."""
    if bound < 2:
        raise InputError("bound must be ≥ 2")
    blocks = [(bound, u, u, backend) for u in range(1, bound + 1)]
    parts = kernels.fan_out(kernels.excluded_search, blocks, jobs)
    sols = [s for part in parts for s in part]
    used = backend or kernels.BACKEND
    return ExcludedFamilyReport(bound, sols, used)


def cyclic_rotations(a: Sequence[int]) -> set[tuple[int, ...]]:
    a = tuple(a)
    return {a[i:] + a[:i] for i in range(len(a))}


def all_permutations(a: Sequence[int]) -> set[tuple[int, ...]]:
    return set(permutations(a))
