"""Invariants of the hypersurface H(a_1..a_n) in its weighted projective space."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .errors import (
    InputError,
    NonIntegerResult,
    NotContractible,
    RequiresWstarOne,
    SpecialAdjunctionCase,
)
from .weights import WeightSystem


@dataclass(frozen=True)
class CanonicalData:
    degree: int
    ample: bool
    sign: int


def canonical_data(ws: WeightSystem) -> CanonicalData:
    """Degree of K_H = O(d - sum w).

    ``ample`` is the sufficient condition min(a) >= n only; ``sign`` is the sign
    of the degree, reported separately.
    """
    degree = ws.d - sum(ws.w)
    return CanonicalData(
        degree=degree,
        ample=min(ws.a) >= ws.n,
        sign=(degree > 0) - (degree < 0),
    )


def _require_plain_adjunction(ws: WeightSystem) -> None:
    if ws.n == 4:
        w = ws.w
        if gcd(w[0], w[2]) != 1 or gcd(w[1], w[3]) != 1:
            raise SpecialAdjunctionCase(
                f"gcd(w1,w3)={gcd(w[0], w[2])}, gcd(w2,w4)={gcd(w[1], w[3])}: "
                "the singular curve of the ambient space lies on the surface"
            )


def k_self_intersection(ws: WeightSystem) -> Fraction:
    """(K_H^(n-2)) = (d - sum w)^(n-2) * d / prod w."""
    if ws.n < 4:
        raise InputError("self-intersection of K needs n ≥ 4")
    _require_plain_adjunction(ws)
    k = ws.d - sum(ws.w)
    return Fraction(k ** (ws.n - 2) * ws.d, prod(ws.w))


def milnor_orlik_rank(w: Sequence[int], d: int) -> int:
    """Middle Betti number of the link of a weighted homogeneous singularity.

    Evaluates sum over subsets I of (-1)^(n-|I|) prod_{i in I}(d/w_i) / lcm(u_i)
    where d/w_i = u_i/v_i in lowest terms.  Everything is scaled by prod(v) so
    the sum runs over integers; per-subset lcm and products are extended from
    the subset with its lowest bit removed.
    """
    w = [int(x) for x in w]
    n = len(w)
    if n == 0 or any(x < 1 for x in w) or d < 1:
        raise InputError("weights and degree must be positive")
    if n > 20:
        raise InputError("subset enumeration supports n ≤ 20")
    u = [d // gcd(d, x) for x in w]
    v = [x // gcd(d, x) for x in w]
    V = prod(v)
    size = 1 << n
    lcm_u = [1] * size
    prod_u = [1] * size
    # product of v over the complement of I
    prod_v_out = [V] * size
    total = V * (-1) ** n
    for mask in range(1, size):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        l_prev = lcm_u[rest]
        lcm_u[mask] = l_prev // gcd(l_prev, u[i]) * u[i]
        prod_u[mask] = prod_u[rest] * u[i]
        prod_v_out[mask] = prod_v_out[rest] // v[i]
        sign = -1 if (n - mask.bit_count()) % 2 else 1
        total += sign * (prod_u[mask] // lcm_u[mask]) * prod_v_out[mask]
    rank, rem = divmod(total, V)
    if rem:
        raise NonIntegerResult(f"Milnor-Orlik sum is {total}/{V}, not an integer")
    return rank


def middle_rank_closed_form(ws: WeightSystem) -> int:
    return (-1) ** ws.n + ws.wstar


def homology_profile(ws: WeightSystem) -> list[int]:
    """Rational Betti numbers b_0..b_{2(n-2)} of H when wstar == 1."""
    if ws.wstar != 1:
        raise RequiresWstarOne(f"homology profile needs wstar = 1, got {ws.wstar}")
    dim = ws.n - 2
    betti = [1 if j % 2 == 0 else 0 for j in range(2 * dim + 1)]
    if ws.n % 2 == 0:
        betti[dim] = 3
    return betti


@dataclass(frozen=True)
class ContractedSurfaceData:
    ws: WeightSystem
    KC1: Fraction
    KC2: Fraction
    C1sq: Fraction
    C2sq: Fraction
    K_S_sq: Fraction
    K_Sstar_sq: Fraction

    def as_dict(self) -> dict:
        return {
            "KC1": self.KC1,
            "KC2": self.KC2,
            "C1sq": self.C1sq,
            "C2sq": self.C2sq,
            "K_S_sq": self.K_S_sq,
            "K_Sstar_sq": self.K_Sstar_sq,
        }


def contracted_surface(ws: WeightSystem) -> ContractedSurfaceData:
    """Intersection data of C1 = (x1=x3=0), C2 = (x2=x4=0) on S and of S -> S*.

    C1 is the weighted line P(w2, w4), so O(1) has degree 1/(w2 w4) on it and
    K.C1 = (d - sum w)/(w2 w4).  The curve is rational and meets the two
    vertices of index w2 and w4, so adjunction gives
    (K + C1).C1 = -1/w2 - 1/w4, hence C1^2 = (w1 + w3 - d)/(w2 w4).
    Symmetrically for C2.  Contracting a curve C with K.C = k and C^2 = c
    changes K^2 by -k^2/c; the curves are disjoint, so the corrections add.
    """
    if ws.n != 4:
        raise InputError("the contracted surface needs n = 4")
    if ws.wstar != 1:
        raise RequiresWstarOne(f"the contracted surface needs wstar = 1, got {ws.wstar}")
    _require_plain_adjunction(ws)
    w1, w2, w3, w4 = ws.w
    d = ws.d
    k = d - (w1 + w2 + w3 + w4)
    kc1 = Fraction(k, w2 * w4)
    kc2 = Fraction(k, w1 * w3)
    c1sq = Fraction(w1 + w3 - d, w2 * w4)
    c2sq = Fraction(w2 + w4 - d, w1 * w3)
    if c1sq >= 0 or c2sq >= 0:
        raise NotContractible(f"C1^2 = {c1sq}, C2^2 = {c2sq}")
    ks = k_self_intersection(ws)
    kss = ks - kc1**2 / c1sq - kc2**2 / c2sq
    return ContractedSurfaceData(ws, kc1, kc2, c1sq, c2sq, ks, kss)


@dataclass
class HypersurfaceInvariants:
    ws: WeightSystem
    canonical: CanonicalData
    k_self_intersection: Fraction | None
    link_middle_rank: int
    milnor_orlik: int
    betti: list[int] | None
    notes: list[str]

    def as_dict(self) -> dict:
        return {
            "weights": self.ws.as_dict(),
            "canonical_degree": self.canonical.degree,
            "canonical_degree_sign": self.canonical.sign,
            "ample": self.canonical.ample,
            "k_self_intersection": self.k_self_intersection,
            "link_middle_rank": self.link_middle_rank,
            "milnor_orlik_rank": self.milnor_orlik,
            "betti": self.betti,
            "notes": self.notes,
        }


def hypersurface_invariants(ws: WeightSystem) -> HypersurfaceInvariants:
    notes = []
    try:
        kk = k_self_intersection(ws)
    except InputError as exc:
        kk = None
        notes.append(f"{type(exc).__name__}: {exc}")
    betti = homology_profile(ws) if ws.wstar == 1 else None
    return HypersurfaceInvariants(
        ws=ws,
        canonical=canonical_data(ws),
        k_self_intersection=kk,
        link_middle_rank=middle_rank_closed_form(ws),
        milnor_orlik=milnor_orlik_rank(ws.w, ws.d),
        betti=betti,
        notes=notes,
    )
