"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (or to stdout when run as a script)."""
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product
from math import gcd, prod

import pytest

from conftest import ACCEPTANCE_LINES
from wps_lab.curves import curve_adjunction_lhs, genus_n3, verify_excluded_family
from wps_lab.errors import SpecialAdjunctionCase
from wps_lab.hypersurface import contracted_surface, middle_rank_closed_form, milnor_orlik_rank
from wps_lab.orbifold import INF, BardenInvariants, circle_action_exists, enumerate_defect_tuples
from wps_lab.seifert import lens_from_conic, rational_ball_membership, seifert_h1_order, wahl_family
from wps_lab.weights import check_reduced_conditions, density_survey, solve_weights


@contextmanager
def criterion(number, title, limit):
    """Run a criterion body under a wall-clock limit and record its verdict."""
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        detail = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        ACCEPTANCE_LINES[number] = f"[{number:2d}] FAIL {title} ({elapsed:.2f}s): {detail}"
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        ACCEPTANCE_LINES[number] = f"[{number:2d}] FAIL {title}: {elapsed:.2f}s >= {limit}s"
        pytest.fail(f"criterion {number} took {elapsed:.2f}s, limit {limit}s")
    ACCEPTANCE_LINES[number] = f"[{number:2d}] PASS {title} ({elapsed:.2f}s < {limit}s)"


def test_c01_weight_identities():
    with criterion(1, "weight identities on 10,000 random tuples", 5):
        rng = random.Random(20240601)
        checked = 0
        while checked < 10_000:
            n = rng.randint(3, 8)
            a = [rng.randint(1, 50) for _ in range(n)]
            if prod(a) == (-1) ** n:
                continue
            ws = solve_weights(a)
            for i in range(n):
                assert a[i] * ws.W[i] + ws.W[(i + 1) % n] == ws.D, a
            rep = check_reduced_conditions(ws)
            assert rep.ok, (a, rep.violations)
            checked += 1


def test_c02_milnor_orlik_closed_form():
    with criterion(2, "Milnor-Orlik subset sum == (-1)^n + wstar, n in 3..6, a_i in [2,6]", 30):
        systems = 0
        for n in (3, 4, 5, 6):
            for a in product(range(2, 7), repeat=n):
                ws = solve_weights(a)
                assert milnor_orlik_rank(ws.w, ws.d) == middle_rank_closed_form(ws), a
                systems += 1
        assert systems == 5**3 + 5**4 + 5**5 + 5**6


def test_c03_defect_list():
    with criterion(3, "coprime defect tuples k=4, M=50 reproduce the list; k=5 empty", 1):
        got = [t.m for t in enumerate_defect_tuples(4, 50, 3, coprime=True).tuples]
        expected = (
            [(2, 3, 5, n) for n in range(7, 51) if gcd(n, 30) == 1]
            + [(2, 3, 7, n) for n in (11, 13, 17, 19, 23, 25, 29, 31, 37, 41)]
            + [(2, 3, 11, 13)]
        )
        assert got == expected
        for bound in (2, 5, 13, 50, 100, 1000, 10_000):
            assert enumerate_defect_tuples(5, bound, 3, coprime=True).tuples == []


def test_c04_genus_adjunction():
    with criterion(4, "curve adjunction identity for a_i in [1,12]; Klein quartic genus 3", 5):
        for a in product(range(1, 13), repeat=3):
            ws = solve_weights(a)
            w1, w2, w3 = ws.w
            assert curve_adjunction_lhs(ws) == ws.wstar - Fraction(1, w1) - Fraction(1, w2) - Fraction(1, w3)
        assert genus_n3((3, 3, 3)) == 3
        assert genus_n3((2, 2, 2)) == 1


def test_c05_contracted_surface_convergence():
    with criterion(5, "|K_S*^2 - 1| decreasing along (t,t+1,t+2,t+3), < 0.01 at t=10^4", 10):
        gaps = {}
        skipped = []
        for t in (10, 10**2, 10**3, 10**4):
            ws = solve_weights((t, t + 1, t + 2, t + 3))
            try:
                gaps[t] = abs(contracted_surface(ws).K_Sstar_sq - 1)
            except SpecialAdjunctionCase:
                skipped.append(t)
        assert 10**4 in gaps, f"no value at t=10^4: SpecialAdjunctionCase at t={skipped}"
        values = [gaps[t] for t in sorted(gaps)]
        assert all(x > y for x, y in zip(values, values[1:]))
        assert gaps[10**4] < Fraction(1, 100)


def test_c06_wahl_family():
    with criterion(6, "Wahl identities and defect < 3 for u in [2,500]", 1):
        for u in range(2, 501):
            fam = wahl_family(u)
            assert 1 + fam.a**3 == fam.n * fam.m
            assert pow(fam.r, 3, fam.m) == 1
            assert 3 * (1 - Fraction(1, 3)) + (1 - Fraction(1, fam.m)) < 3


def test_c07_lens_pipeline():
    with criterion(7, "lens_from_conic -> family (1) with n=a+b; |H_1| = (a+b)^2, a+b <= 40", 2):
        pairs = 0
        for a in range(1, 40):
            for b in range(1, 41 - a):
                if gcd(a, b) != 1:
                    continue
                cl = lens_from_conic(a, b)
                m = rational_ball_membership(cl.lens.p, cl.lens.q)
                assert m.family == 1 and m.n == a + b, (a, b)
                assert seifert_h1_order((a, b), Fraction((a + b) ** 2, a * b)) == (a + b) ** 2
                pairs += 1
        assert pairs > 0


def test_c08_density():
    with criterion(8, "n=4 density over [2,13] >= 3/4; all-odd n=3 tuples have all W_i even", 60):
        res = density_survey(4, 2, 13)
        assert res.total == 12**4
        assert res.fraction == Fraction(161, 192)
        assert res.fraction >= Fraction(3, 4)
        odd = density_survey(3, 2, 13)
        assert odd.all_odd_total == 6**3
        assert odd.all_odd_all_W_even == odd.all_odd_total, (
            f"{odd.all_odd_all_W_even} of {odd.all_odd_total} all-odd n=3 tuples have all W_i even"
        )


def test_c09_excluded_family():
    with criterion(9, "no solutions of (mu+1)(mv+1) = (m+1)w up to 50", 10):
        assert verify_excluded_family(50).solutions == []


# (k, torsion [(p, i, c)], i(L), exists, failed conditions), verdicts read off the three conditions
CIRCLE_TABLE = [
    (0, [], 0, True, []),  # S^5
    (0, [], 1, True, []),
    (0, [], INF, True, []),
    (0, [], 2, False, [2]),
    (0, [(3, 1, 1)], 0, True, []),
    (0, [(3, 1, 1), (3, 2, 1)], 0, False, [1]),
    (1, [(3, 1, 1), (3, 2, 1)], 0, True, []),
    (1, [(3, 1, 1), (3, 2, 1), (3, 3, 2)], 1, False, [1]),
    (0, [(2, 1, 1)], INF, False, [3]),
    (1, [(2, 1, 1)], INF, True, []),
    (1, [(2, 1, 1), (2, 2, 1)], INF, False, [3]),
    (2, [(2, 1, 1), (2, 2, 1)], INF, True, []),
    (0, [(2, 1, 3)], 1, True, []),
    (0, [(5, 1, 1), (7, 1, 1), (11, 2, 4)], 0, True, []),
    (0, [(5, 1, 1), (5, 3, 1)], 3, False, [1, 2]),
    (2, [], 5, False, [2]),
    (0, [(2, 1, 1), (2, 2, 1)], INF, False, [1, 3]),
    (3, [(2, 1, 1), (2, 2, 1), (2, 3, 1), (2, 4, 1)], INF, False, [3]),
    (3, [(2, 1, 1), (2, 2, 1), (2, 3, 1), (2, 4, 1)], 0, True, []),
    (1, [(3, 1, 1), (3, 2, 1), (3, 3, 1), (2, 1, 1)], 1, False, [1]),
    (0, [(13, 5, 2)], INF, True, []),
]


def test_c10_circle_action_table():
    with criterion(10, "circle-action verdicts on a 21-case Barden table", 1):
        assert len(CIRCLE_TABLE) == 21
        for k, torsion, iL, exists, failed in CIRCLE_TABLE:
            v = circle_action_exists(BardenInvariants(k, tuple(torsion), iL))
            assert (v.exists, v.failed) == (exists, failed), (k, torsion, iL)


if __name__ == "__main__":
    import sys

    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
