"""Orbifold Euler characteristics, BMY-type inequality checks, coprime defect
tuples, and the existence test for circle actions on simply connected 5-manifolds."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError
from .exact import is_prime


def defect(orders: Iterable[int]) -> Fraction:
    """sum(1 - 1/m) over local fundamental group orders."""
    return sum((1 - Fraction(1, m) for m in orders), Fraction(0))


@dataclass(frozen=True)
class OrbifoldSurfaceData:
    euler: int
    link_orders: tuple[int, ...] = ()
    c1_squared: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "link_orders", tuple(int(x) for x in self.link_orders))
        if any(x < 1 for x in self.link_orders):
            raise InputError("local fundamental group orders must be ≥ 1")
        if self.c1_squared is not None:
            object.__setattr__(self, "c1_squared", Fraction(self.c1_squared))

    @property
    def defect(self) -> Fraction:
        return defect(self.link_orders)

    @property
    def e_orb(self) -> Fraction:
        return self.euler - self.defect


def orbifold_euler(data: OrbifoldSurfaceData) -> Fraction:
    return data.e_orb


@dataclass
class BMYReport:
    e_orb: Fraction
    defect: Fraction
    c1_bound: Fraction
    c1_inequality: bool | None
    e_orb_nonnegative: bool
    defect_at_most_3: bool
    defect_below_3: bool
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "e_orb": self.e_orb,
            "defect": self.defect,
            "c1_squared_upper_bound": self.c1_bound,
            "c1_squared_le_3_e_orb": self.c1_inequality,
            "e_orb_nonnegative": self.e_orb_nonnegative,
            "defect_le_3": self.defect_at_most_3,
            "defect_lt_3": self.defect_below_3,
            "notes": self.notes,
        }


def bmy_check(data: OrbifoldSurfaceData) -> BMYReport:
    """Exact checks of c1^2 <= 3 e_orb, 0 <= e_orb, and of the defect bound
    in both its non-strict and strict forms.

    Without ``c1_squared`` the first check is reported as ``None`` with a
    ``MissingC1`` note; the others are still evaluated.
    """
    e = data.e_orb
    dfc = data.defect
    notes = []
    if data.c1_squared is None:
        c1 = None
        notes.append("MissingC1: c1^2 not given, first inequality not evaluated")
    else:
        c1 = data.c1_squared <= 3 * e
    return BMYReport(
        e_orb=e,
        defect=dfc,
        c1_bound=3 * e,
        c1_inequality=c1,
        e_orb_nonnegative=e >= 0,
        defect_at_most_3=dfc <= 3,
        defect_below_3=dfc < 3,
        notes=notes,
    )


@dataclass(frozen=True)
class DefectTuple:
    m: tuple[int, ...]

    @property
    def defect(self) -> Fraction:
        return defect(self.m)

    @property
    def pairwise_coprime(self) -> bool:
        return all(gcd(x, y) == 1 for i, x in enumerate(self.m) for y in self.m[i + 1:])


@dataclass
class DefectEnumeration:
    lengths: tuple[int, ...]
    bound: int
    threshold: Fraction
    strict: bool
    coprime: bool
    tuples: list[DefectTuple]
    unbounded_prefixes: list[tuple[int, ...]]

    def as_dict(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "max": self.bound,
            "threshold": self.threshold,
            "strict": self.strict,
            "coprime": self.coprime,
            "count": len(self.tuples),
            "tuples": [{"m": list(t.m), "defect": t.defect} for t in self.tuples],
            "unbounded_prefixes": [list(p) for p in self.unbounded_prefixes],
        }


def _within(value: Fraction, threshold: Fraction, strict: bool) -> bool:
    return value < threshold if strict else value <= threshold


def _search(length, bound, threshold, strict, coprime):
    """Non-decreasing tuples in [2, bound]^length under the threshold, lexicographic."""
    out = []
    prefix: list[int] = []
    gap = [Fraction(0)] + [1 - Fraction(1, m) for m in range(1, bound + 1)]

    def rec(start: int, acc: Fraction):
        left = length - len(prefix)
        if left == 0:
            out.append(tuple(prefix))
            return
        for m in range(start, bound + 1):
            # remaining entries are >= m, each adding at least 1 - 1/m
            if not _within(acc + left * gap[m], threshold, strict):
                break
            if coprime and any(gcd(m, x) != 1 for x in prefix):
                continue
            prefix.append(m)
            rec(m, acc + gap[m])
            prefix.pop()

    rec(2, Fraction(0))
    return out


def enumerate_defect_tuples(
    k: int | Iterable[int],
    bound: int,
    threshold: Fraction | int = 3,
    strict: bool = False,
    coprime: bool = False,
) -> DefectEnumeration:
    """All non-decreasing tuples with entries in ``[2, bound]`` and total defect
    at most (or, with ``strict``, below) ``threshold``.

    Also reports the prefixes of length k-1 whose own defect is at most
    ``threshold - 1``: every admissible extension of such a prefix passes,
    whatever its size, so the finite list stands in for an infinite family.
    """
    if bound < 2:
        raise InputError("max must be ≥ 2")
    lengths = (k,) if isinstance(k, int) else tuple(k)
    if any(x < 1 for x in lengths):
        raise InputError("tuple lengths must be ≥ 1")
    threshold = Fraction(threshold)
    tuples: list[DefectTuple] = []
    prefixes: list[tuple[int, ...]] = []
    for length in lengths:
        tuples.extend(DefectTuple(t) for t in _search(length, bound, threshold, strict, coprime))
        if length >= 2:
            prefixes.extend(_search(length - 1, bound, threshold - 1, False, coprime))
    return DefectEnumeration(lengths, bound, threshold, strict, coprime, tuples, prefixes)


class Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self):
        return "INF"


INF = Infinity.INF


@dataclass(frozen=True)
class BardenInvariants:
    """k = rank of H_2, torsion entries (p, i, c(p^i)), and i(L) (int or INF)."""

    k: int
    torsion: tuple[tuple[int, int, int], ...] = ()
    iL: int | Infinity = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(tuple(int(x) for x in t) for t in self.torsion))
        if self.k < 0:
            raise InputError("k must be ≥ 0")
        seen = set()
        for p, i, c in self.torsion:
            if not is_prime(p):
                raise InputError(f"{p} is not prime")
            if i < 1:
                raise InputError("prime-power exponents must be ≥ 1")
            if c < 1:
                raise InputError("torsion counts c(p^i) must be positive")
            if (p, i) in seen:
                raise InputError(f"duplicate torsion entry for {p}^{i}")
            seen.add((p, i))
        if self.iL is not INF and (not isinstance(self.iL, int) or self.iL < 0):
            raise InputError("i(L) must be a nonnegative integer or INF")

    def nonzero_exponents(self, p: int) -> int:
        return sum(1 for q, _, c in self.torsion if q == p and c > 0)


@dataclass
class CircleActionVerdict:
    exists: bool
    failed: list[int]
    reasons: list[str]

    def as_dict(self) -> dict:
        return {"exists": self.exists, "failed_conditions": self.failed, "reasons": self.reasons}


def circle_action_exists(inv: BardenInvariants) -> CircleActionVerdict:
    """Fixed point free circle action test for a simply connected 5-manifold."""
    failed, reasons = [], []
    for p in sorted({p for p, _, _ in inv.torsion}):
        count = inv.nonzero_exponents(p)
        if count > inv.k + 1:
            failed.append(1)
            reasons.append(f"{count} nonzero c({p}^i) > k+1 = {inv.k + 1}")
            break
    if inv.iL not in (0, 1, INF):
        failed.append(2)
        reasons.append(f"i(L) = {inv.iL} not in {{0, 1, inf}}")
    if inv.iL is INF:
        count = inv.nonzero_exponents(2)
        if count > inv.k:
            failed.append(3)
            reasons.append(f"i(L) = inf and {count} nonzero c(2^i) > k = {inv.k}")
    return CircleActionVerdict(not failed, failed, reasons)
