"""Seifert fibered spaces and lens spaces: H_1 orders, lens normal forms,
the rational-ball families, and the explicit example families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, prod
from typing import Sequence

from .errors import (
    ConsistencyFailure,
    InputError,
    NotCoprime,
    NotIntegral,
    ZeroSelfIntersection,
)
from .exact import SmithForm, ext_gcd, smith_normal_form


def _pairwise_coprime(xs: Sequence[int]) -> bool:
    return all(gcd(x, y) == 1 for i, x in enumerate(xs) for y in xs[i + 1:])


@dataclass(frozen=True)
class SeifertData:
    multiplicities: tuple[int, ...]
    FF: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", tuple(int(x) for x in self.multiplicities))
        if any(x < 2 for x in self.multiplicities):
            raise InputError("fiber multiplicities must be ≥ 2")
        if self.FF is not None:
            object.__setattr__(self, "FF", Fraction(self.FF))

    @property
    def homology_sphere_candidate(self) -> bool:
        return _pairwise_coprime(self.multiplicities)


def seifert_h1_order(d: Sequence[int], FF: Fraction | int) -> int:
    """|H_1(M)| = |(F.F)| * prod d_i for pairwise coprime multiplicities (sign dropped).

    Multiplicity 1 denotes a regular fiber and is dropped.
    """
    if any(x < 1 for x in d):
        raise InputError("fiber multiplicities must be ≥ 1")
    data = SeifertData(tuple(x for x in d if x > 1), Fraction(FF))
    if not data.homology_sphere_candidate:
        raise NotCoprime(f"multiplicities {data.multiplicities} are not pairwise coprime")
    if data.FF == 0:
        raise ZeroSelfIntersection("(F.F) = 0")
    order = abs(data.FF) * prod(data.multiplicities)
    if order.denominator != 1:
        raise NotIntegral(f"|FF| * prod(d) = {order} is not an integer")
    return int(order)


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with q reduced into [1, p-1] (or q = 0 when p = 1)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise InputError("lens spaces need p ≥ 2")
        object.__setattr__(self, "q", self.q % self.p)
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) != 1")

    def orbit(self) -> list[int]:
        """q under the group generated by q -> q^-1 and q -> p - q, sorted."""
        p, q = self.p, self.q
        inv = pow(q, -1, p)
        return sorted({q, inv, p - q, p - inv})

    def normal_form(self) -> "LensSpace":
        return LensSpace(self.p, self.orbit()[0])

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


def lens_normalize(p: int, q: int) -> LensSpace:
    return LensSpace(p, q).normal_form()


@dataclass
class BallMembership:
    p: int
    q: int
    family: int | None
    n: int | None = None
    a: int | None = None
    d: int | None = None
    matched_q: int | None = None

    @property
    def in_list(self) -> bool:
        return self.family is not None

    def as_dict(self) -> dict:
        out = {"p": self.p, "q": self.q, "family": self.family or "NotInList"}
        for k in ("n", "a", "d", "matched_q"):
            if getattr(self, k) is not None:
                out[k] = getattr(self, k)
        return out


def _ball_candidates(n: int):
    """(family, witness name, witness, q) for the three rational-ball series with p = n^2."""
    p = n * n
    for a in range(1, p + 1):
        if gcd(n, a) == 1:
            yield 1, "a", a, (n * a - 1) % p
    for d in range(1, n):
        if (n - 1) % d == 0 and d % 2 == 1:
            yield 2, "d", d, (d * (n - 1)) % p
    for d in range(1, 2 * n + 2):
        if (2 * n + 1) % d == 0:
            yield 3, "d", d, (d * (n - 1)) % p


def rational_ball_membership(p: int, q: int) -> BallMembership:
    """Is L(p, q), up to the two lens moves, in one of the three series
    (n^2, na - 1) with gcd(n, a) = 1, (n^2, d(n-1)) with d | n-1 odd, or
    (n^2, d(n-1)) with d | 2n+1?

    Witnesses are found by brute force.  A witness hitting q itself is
    preferred over one hitting another point of the orbit.
    """
    lens = LensSpace(p, q)
    n = isqrt(p)
    if n * n != p:
        return BallMembership(p, lens.q, None)
    orbit = lens.orbit()
    cands = [c for c in _ball_candidates(n) if gcd(c[3], p) == 1]
    for targets in ([lens.q], orbit):
        for family in (1, 2, 3):
            for fam, name, value, cq in cands:
                if fam == family and cq in targets:
                    return BallMembership(p, lens.q, fam, n=n, matched_q=cq, **{name: value})
    return BallMembership(p, lens.q, None)


@dataclass
class ConicLens:
    a: int
    b: int
    a_prime: int
    b_prime: int
    lens: LensSpace

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "a_prime": self.a_prime,
            "b_prime": self.b_prime,
            "lens": self.lens.as_dict(),
            "normal_form": self.lens.normal_form().as_dict(),
        }


def lens_from_conic(a: int, b: int, shift: int = 0) -> ConicLens:
    """Boundary of a tubular neighbourhood of (xy = z^(a+b)) in P(a, b, 1).

    This is L((a+b)^2, (a'-b')(a+b) - 1) where a a' + b b' = 1.  ``shift``
    moves along the Bezout solutions (a' + b t, b' - a t); q changes by a
    multiple of p, so the lens space does not.
    """
    if a < 1 or b < 1:
        raise InputError("a, b must be ≥ 1")
    g, s, t = ext_gcd(a, b)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {g}")
    ap, bp = s + b * shift, t - a * shift
    if (a + b) * ap - (ap - bp) * b != 1:
        raise ConsistencyFailure("(a+b)a' - (a'-b')b != 1")
    p = (a + b) ** 2
    return ConicLens(a, b, ap, bp, LensSpace(p, (ap - bp) * (a + b) - 1))


@dataclass
class MilnorQuotientFamily:
    a: int
    b: int
    c: int
    weights: tuple[int, int, int]
    multiplicities: tuple[int, int, int]
    milnor_euler: int
    group_order: int
    quotient_euler: int

    def as_dict(self) -> dict:
        return {
            "abc": [self.a, self.b, self.c],
            "weights": list(self.weights),
            "multiplicities": list(self.multiplicities),
            "milnor_fiber_euler": self.milnor_euler,
            "group_order": self.group_order,
            "quotient_euler": self.quotient_euler,
        }


def milnor_quotient_family(a: int, b: int, c: int) -> MilnorQuotientFamily:
    """x^a y + y^b z + z^c x modulo the free Z/(abc+1) action on its Milnor fiber."""
    if min(a, b, c) < 1:
        raise InputError("a, b, c must be ≥ 1")
    weights = (b * c - c + 1, c * a - a + 1, a * b - b + 1)
    order = a * b * c + 1
    return MilnorQuotientFamily(
        a, b, c,
        weights=weights,
        multiplicities=(a * b - b + 1, b * c - c + 1, c * a - a + 1),
        milnor_euler=order,
        group_order=order,
        quotient_euler=order // order,  # free action, so e(quotient) = e(M)/|G|
    )


@dataclass
class WahlFamily:
    u: int
    m: int
    n: int
    r: int
    a: int

    @property
    def group_order(self) -> int:
        return self.n * self.m

    @property
    def milnor_number(self) -> int:
        return self.a**3

    @property
    def milnor_euler(self) -> int:
        return 1 + self.a**3

    @property
    def multiplicities(self) -> tuple[int, int, int, int]:
        return (3, 3, 3, self.m)

    @property
    def defect(self) -> Fraction:
        return sum((1 - Fraction(1, x) for x in self.multiplicities), Fraction(0))

    def as_dict(self) -> dict:
        return {
            "u": self.u,
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "a": self.a,
            "group_order": self.group_order,
            "milnor_number": self.milnor_number,
            "milnor_fiber_euler": self.milnor_euler,
            "r_cubed_mod_m": pow(self.r, 3, self.m),
            "multiplicities": list(self.multiplicities),
            "defect": self.defect,
        }


def wahl_family(u: int) -> WahlFamily:
    """Wahl's Seifert rational homology sphere with fibers (3, 3, 3, m) bounding a rational ball."""
    if u < 2:
        raise InputError("u must be ≥ 2")
    fam = WahlFamily(
        u=u,
        m=3 * u * u - 3 * u + 1,
        n=9 * u,
        r=3 * u * u - 6 * u + 2,
        a=3 * u - 1,
    )
    if fam.milnor_euler != fam.group_order:
        raise ConsistencyFailure(f"1 + a^3 = {fam.milnor_euler} != nm = {fam.group_order}")
    if pow(fam.r, 3, fam.m) != 1 % fam.m:
        raise ConsistencyFailure(f"r^3 mod m = {pow(fam.r, 3, fam.m)} != 1")
    return fam


def star_relation_matrix(r: Sequence[int]) -> list[list[int]]:
    m = len(r)
    rows = [[r[i] if j == i else 0 for j in range(m)] for i in range(m)]
    rows.append([1] * m)
    return rows


def star_presentation_h1(r: Sequence[int]) -> SmithForm:
    """Abelianization of <a_1..a_m : a_i^(r_i), a_1...a_m>."""
    if len(r) < 1 or any(x < 2 for x in r):
        raise InputError("need m ≥ 1 orders, each ≥ 2")
    return smith_normal_form(star_relation_matrix(r))
