from fractions import Fraction
from itertools import product
from math import gcd, prod

import pytest
from hypothesis import assume, given, settings, strategies as st

from wps_lab.errors import InputError, NonIntegerResult, RequiresWstarOne, SpecialAdjunctionCase
from wps_lab.hypersurface import (
    canonical_data,
    contracted_surface,
    homology_profile,
    hypersurface_invariants,
    k_self_intersection,
    middle_rank_closed_form,
    milnor_orlik_rank,
)
from wps_lab.weights import solve_weights

from oracles import milnor_orlik_fraction


def test_canonical_data_examples():
    c = canonical_data(solve_weights((2, 4, 6, 8)))
    assert (c.degree, c.ample, c.sign) == (63, False, 1)
    c = canonical_data(solve_weights((4, 5, 6, 7)))
    assert (c.degree, c.ample) == (303, True)
    assert canonical_data(solve_weights((2, 2, 2))).degree == 0


def test_k_self_intersection_examples():
    assert k_self_intersection(solve_weights((2, 4, 6, 8))) == Fraction(1520127, 20927241)
    with pytest.raises(SpecialAdjunctionCase):
        k_self_intersection(solve_weights((4, 5, 6, 7)))
    with pytest.raises(InputError):
        k_self_intersection(solve_weights((2, 3, 5)))


@pytest.mark.parametrize(
    "w,d,expected",
    [((11, 9, 4), 31, 0), ((151, 81, 59, 29), 383, 2), ((1, 1, 1), 3, 2)],
)
def test_milnor_orlik_examples(w, d, expected):
    assert milnor_orlik_fraction(w, d) == expected
    assert milnor_orlik_rank(w, d) == expected


@settings(max_examples=200)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=6), st.integers(1, 200))
def test_milnor_orlik_matches_fraction_oracle(w, d):
    ref = milnor_orlik_fraction(w, d)
    if ref.denominator == 1:
        assert milnor_orlik_rank(w, d) == ref
    else:
        with pytest.raises(NonIntegerResult):
            milnor_orlik_rank(w, d)


def test_milnor_orlik_brieskorn_poincare():
    # x^2 + y^3 + z^5: weights (15, 10, 6), degree 30, link is the Poincare sphere
    assert milnor_orlik_rank((15, 10, 6), 30) == 0
    # x^2 + y^2 + z^2 + w^2 in C^4: link S^2 x S^3 style, middle rank 1
    assert milnor_orlik_rank((1, 1, 1, 1), 2) == 1


@pytest.mark.parametrize("a,expected", [((2, 3, 5), 0), ((2, 4, 6, 8), 2), ((2, 2, 2), 2)])
def test_closed_form_examples(a, expected):
    assert middle_rank_closed_form(solve_weights(a)) == expected


def test_closed_form_agrees_exhaustive_small():
    for n in (3, 4):
        for a in product(range(1, 5), repeat=n):
            if prod(a) == (-1) ** n:
                continue
            ws = solve_weights(a)
            if min(ws.w) < 1:
                continue  # an exponent 1 can produce a zero weight
            assert milnor_orlik_rank(ws.w, ws.d) == middle_rank_closed_form(ws)


def test_homology_profile():
    ws = solve_weights((3, 4, 5, 6, 7))
    assert ws.wstar == 1
    assert homology_profile(ws) == [1, 0, 1, 0, 1, 0, 1]
    assert homology_profile(solve_weights((2, 4, 6, 8))) == [1, 0, 3, 0, 1]
    with pytest.raises(RequiresWstarOne):
        homology_profile(solve_weights((2, 2, 2)))


@given(st.integers(3, 8).flatmap(lambda n: st.lists(st.integers(2, 9), min_size=n, max_size=n)))
def test_profile_total_betti(a):
    ws = solve_weights(a)
    assume(ws.wstar == 1)
    total = sum(homology_profile(ws))
    assert total == (len(a) - 1 if len(a) % 2 else len(a) + 1)


@given(st.integers(4, 7).flatmap(lambda n: st.integers(n, 20).flatmap(
    lambda lo: st.lists(st.integers(lo, lo + 15), min_size=n, max_size=n))))
def test_k_squared_positive_when_exponents_large(a):
    ws = solve_weights(a)
    assert canonical_data(ws).degree > 0
    try:
        assert k_self_intersection(ws) > 0
    except SpecialAdjunctionCase:
        assert len(a) == 4


def test_contracted_surface_example():
    c = contracted_surface(solve_weights((2, 4, 6, 8)))
    assert c.C1sq == Fraction(-173, 2349)
    assert c.C2sq == Fraction(-273, 8909)
    assert c.K_S_sq == Fraction(1520127, 20927241)
    assert c.K_Sstar_sq == c.K_S_sq + Fraction(3969, 406377) + Fraction(3969, 2432157)
    assert c.K_Sstar_sq == Fraction(189, 2249)
    assert c.KC1 == Fraction(63, 81 * 29) and c.KC2 == Fraction(63, 151 * 59)


def test_contracted_surface_rejections():
    for t in (2, 3, 5):
        ws = solve_weights((t, t, t, t))
        assert ws.wstar == t**3 - t**2 + t - 1
        with pytest.raises(RequiresWstarOne):
            contracted_surface(ws)
    with pytest.raises(SpecialAdjunctionCase):
        contracted_surface(solve_weights((4, 5, 6, 7)))
    with pytest.raises(InputError):
        contracted_surface(solve_weights((2, 3, 5)))


@given(st.lists(st.integers(2, 40), min_size=4, max_size=4))
def test_contracted_surface_properties(a):
    ws = solve_weights(a)
    w = ws.w
    assume(ws.wstar == 1 and gcd(w[0], w[2]) == 1 and gcd(w[1], w[3]) == 1)
    assume(ws.d - sum(w) > 0)
    c = contracted_surface(ws)
    assert c.C1sq < 0 and c.C2sq < 0
    assert c.K_Sstar_sq > c.K_S_sq
    # adjunction recovered from the computed pieces
    assert c.KC1 + c.C1sq == -Fraction(1, w[1]) - Fraction(1, w[3])
    assert c.KC2 + c.C2sq == -Fraction(1, w[0]) - Fraction(1, w[2])


def test_balanced_family_converges():
    # (t, t, t+1, t+1) satisfies the gcd preconditions at these t
    pinned = {
        10: Fraction(31062962, 49905045),
        100: Fraction(2400500323999801, 2499995025002475),
    }
    gaps = []
    for t in (10, 100, 1000, 10000):
        c = contracted_surface(solve_weights((t, t, t + 1, t + 1)))
        if t in pinned:
            assert c.K_Sstar_sq == pinned[t]
        gaps.append(abs(c.K_Sstar_sq - 1))
        assert abs(k_self_intersection(c.ws) - 1) < 1
    assert all(x > y for x, y in zip(gaps, gaps[1:]))
    assert gaps[-1] < Fraction(1, 1000)


def test_invariants_bundle():
    inv = hypersurface_invariants(solve_weights((4, 5, 6, 7)))
    assert inv.k_self_intersection is None and "SpecialAdjunctionCase" in inv.notes[0]
    assert inv.milnor_orlik == inv.link_middle_rank == 2
    assert inv.betti == [1, 0, 3, 0, 1]
