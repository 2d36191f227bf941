"""Acceptance criteria 1-10, each checked against an independent reference."""
import random
import time
from fractions import Fraction
from math import factorial, gcd

import pytest
import sympy as sp

from gwcalc import (
    CorrespondenceKind,
    EvenSeries,
    GenusSequence,
    apply_blowup,
    closed_form,
    convolve,
    deconvolve,
    generating_function_check,
    impulse,
    series_add,
    series_inverse,
    series_mul,
    series_pow,
    sinc_half,
    verify_closed_form,
)
from gwcalc.bps import (
    ClassDescriptor,
    bps_family_to_gw,
    bps_to_gw,
    check_integrality,
    gw_family_to_bps,
    gw_to_bps,
    verify_blowup_bps_invariance,
)
from gwcalc.checks import point_preset_tables, run_suite
from gwcalc.degeneration import (
    PRESET_NAMES,
    Caps,
    Partition,
    enumerate_admissible_triples,
    enumerate_partitions,
    evaluate_degeneration,
    get_preset,
    survivors_report,
    zeta,
)

from oracles import cauchy, even_coeffs

G = 10
SEED = 20261018


def rand_frac(rng):
    return Fraction(rng.randint(-12, 12), rng.randint(1, 9))


def rand_seq(rng, order, c1=0):
    return GenusSequence([rand_frac(rng) for _ in range(order + 1)], c1)


# 1 ----------------------------------------------------------------------

@pytest.mark.criterion(1, "point blow-up coefficients, g <= 10")
def test_point_primary_coefficients():
    H = GenusSequence([Fraction((-1) ** g * 2, factorial(2 * g + 2)) for g in range(G + 1)])
    C = deconvolve(H, impulse(G))
    assert C.values == H.values
    assert C.values == even_coeffs("(sin(u/2)/(u/2))**2", G)
    assert series_pow(sinc_half(G), 2).coeffs == C.values
    report = verify_closed_form(CorrespondenceKind.POINT_PRIMARY, G)
    assert report.passed and report.solved.values == H.values


# 2 ----------------------------------------------------------------------

@pytest.mark.criterion(2, "point descendant coefficients, g <= 10")
def test_point_descendant_coefficients():
    H = GenusSequence([Fraction((-1) ** g, factorial(2 * g + 1)) for g in range(G + 1)])
    C = deconvolve(H, impulse(G))
    assert C.values == even_coeffs("sin(u)/u", G)
    report = verify_closed_form(CorrespondenceKind.POINT_DESCENDANT, G)
    assert report.passed and report.solved.values == C.values


# 3 ----------------------------------------------------------------------

@pytest.mark.criterion(3, "exceptional descendant coefficients, g <= 10")
def test_exceptional_tau_coefficients():
    H = GenusSequence([3 * (g == 0) - Fraction(2 * (-1) ** g, factorial(2 * g + 1)) for g in range(G + 1)])
    C = deconvolve(H, impulse(G))
    expected = tuple(3 * (g == 0) - 2 * c for g, c in enumerate(even_coeffs("sin(u)/u", G)))
    assert C.values == expected
    relation = impulse(G).linear_combination(3, closed_form(CorrespondenceKind.POINT_DESCENDANT, G), -2)
    assert C.values == relation.values
    report = verify_closed_form(CorrespondenceKind.EXCEPTIONAL_TAU, G)
    assert report.passed and report.solved.values == expected
    assert C.values[:3] == (1, Fraction(1, 3), Fraction(-1, 60))


# 4 ----------------------------------------------------------------------

@pytest.mark.criterion(4, "curve blow-up coefficients, g <= 10")
def test_curve_coefficients():
    H = GenusSequence([Fraction((-1) ** g, factorial(2 * g + 1) * 4 ** g) for g in range(G + 1)])
    C = deconvolve(H, impulse(G))
    assert C.values == even_coeffs("sin(u/2)/(u/2)", G)
    assert sinc_half(G).coeffs == C.values
    report = verify_closed_form(CorrespondenceKind.CURVE, G)
    assert report.passed and report.solved.values == C.values


# 5 ----------------------------------------------------------------------

@pytest.mark.criterion(5, "generating function F = sinc(u/2)^2 F~ on 50 random inputs, G = 8")
def test_generating_function_randomized():
    rng = random.Random(SEED)
    sinc2 = even_coeffs("(sin(u/2)/(u/2))**2", 8)
    for _ in range(50):
        P = rand_seq(rng, 8)
        assert apply_blowup(CorrespondenceKind.POINT_PRIMARY, P).values == cauchy(sinc2, P.values)
        assert generating_function_check(P).passed


# 6 ----------------------------------------------------------------------

EXPECTED_PROFILES = {
    "p3-point": ((1,), (0,)),
    "p3tilde-point": ((1,), (0,)),
    "p3-point-tau": ((1,), (2,)),
    "curve-plus": ((1,), (0,), 0),
    "curve-tilde-plus": ((1,), (0,), 0),
}


@pytest.mark.criterion(6, "dimension filter leaves one profile per preset, g <= 5, m <= 3")
@pytest.mark.parametrize("name", PRESET_NAMES)
def test_survivor_profiles(name):
    report = survivors_report(name, 5)
    expected = EXPECTED_PROFILES[name]
    runs = report.profiles_by_run()
    assert set(runs) == {(g, m) for g in range(6) for m in report.m_values}
    assert max(report.m_values) == 3
    assert all(profiles == {expected} for profiles in runs.values())
    assert report.profiles == [expected] and report.matches_expected


# 7 ----------------------------------------------------------------------

@pytest.mark.criterion(7, "degeneration sum on the point preset equals the convolution, g <= 6")
def test_degeneration_oracle():
    rng = random.Random(SEED + 7)
    I, K = rand_seq(rng, 6), rand_seq(rng, 6)
    plus, minus = point_preset_tables(I, K)
    preset = get_preset("p3-point")
    for g in range(7):
        direct = sum((I[a] * K[g - a] for a in range(g + 1)), Fraction(0))
        assert evaluate_degeneration(g, preset.markings(1), plus, minus, preset.geometry) == direct
    assert convolve(I, K).values == cauchy(I.values, K.values)


# 8 ----------------------------------------------------------------------

@pytest.mark.criterion(8, "BPS round trip on 50 random inputs, both branches, G = 8")
def test_bps_round_trip():
    rng = random.Random(SEED + 8)
    for t in range(50):
        if t % 2 == 0:
            c1 = rng.randint(1, 6)
            gw = rand_seq(rng, 8, c1)
            assert bps_to_gw(gw_to_bps(gw, ClassDescriptor((1,), c1))).values == gw.values
        else:
            x, y = rng.randint(1, 4), rng.randint(0, 4)
            h = gcd(x, y)
            base = (x // h, y // h)
            n = rng.randint(1, 4)
            family = {tuple(d * b for b in base): rand_seq(rng, 8)
                      for d in range(1, n + 1) if n % d == 0}
            back = bps_family_to_gw(gw_family_to_bps(family))
            assert all(back[c].values == family[c].values for c in family)


# 9 ----------------------------------------------------------------------

@pytest.mark.criterion(9, "BPS numbers invariant under point and curve blow-up; P3 line count")
def test_bps_blowup_invariance():
    rng = random.Random(SEED + 9)
    for _ in range(50):
        P = rand_seq(rng, 8)
        assert verify_blowup_bps_invariance(P, rng.randint(3, 8), CorrespondenceKind.POINT_PRIMARY).passed
        assert verify_blowup_bps_invariance(P, rng.randint(2, 8), CorrespondenceKind.CURVE).passed


@pytest.mark.criterion(9, "BPS numbers invariant under point and curve blow-up; P3 line count")
def test_p3_two_point_line():
    # GW of the line class through two points is sinc(u/2)^2; with c1 = 4 that is n = (1, 0, ...)
    gw = GenusSequence(even_coeffs("(sin(u/2)/(u/2))**2", 8), 4)
    rec = gw_to_bps(gw, ClassDescriptor((1,), 4))
    assert rec.values == (1,) + (0,) * 8
    assert check_integrality(rec).integral
    report = verify_blowup_bps_invariance(impulse(8), 4)
    assert report.passed and report.upstairs.values == (1,) + (0,) * 8


# 10 ---------------------------------------------------------------------

@pytest.mark.criterion(10, "ring axioms, deconvolution, partition identities, genus relation")
def test_property_suites():
    rng = random.Random(SEED + 10)

    def rs():
        return EvenSeries(rand_frac(rng) for _ in range(7))

    for _ in range(25):
        a, b, c = rs(), rs(), rs()
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
        assert series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c))
        if a[0] != 0:
            assert series_mul(a, series_inverse(a)).coeffs == (1,) + (0,) * 6
        C, P = rand_seq(rng, 6), rand_seq(rng, 6)
        if P[0] != 0:
            assert deconvolve(convolve(C, P), P).values == C.values

    assert zeta(Partition((1,))) == 1
    assert len(enumerate_partitions(5)) == 7
    for n in range(1, 9):
        assert len(enumerate_partitions(n)) == sp.partition(n)

    for name in ("p3-point", "p3tilde-point", "curve-plus"):
        preset = get_preset(name)
        for g in range(3):
            for m in (1, 2):
                for t in enumerate_admissible_triples(g, preset.markings(m), preset.geometry, Caps(2, 3)):
                    g1, g2 = t.genus_split
                    k1, k2 = t.component_counts
                    assert g == g1 + g2 + len(t.mu) + 1 - k1 - k2


def test_full_suite_under_a_minute():
    start = time.perf_counter()
    results = run_suite(10)
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]
    assert time.perf_counter() - start < 60
