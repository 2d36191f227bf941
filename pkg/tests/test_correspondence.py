import random
from fractions import Fraction
from math import factorial

import pytest

from gwcalc.correspondence import (
    LOCALIZATION_DATA,
    CorrespondenceKind,
    GenusSequence,
    apply_blowup,
    closed_form,
    convolve,
    deconvolve,
    generating_function_check,
    impulse,
    verify_closed_form,
)
from gwcalc.errors import LengthMismatch, SingularSystem

from oracles import cauchy, even_coeffs

F = Fraction
K = CorrespondenceKind


def test_convolve_examples():
    C = closed_form(K.POINT_PRIMARY, 5)
    assert convolve(C, impulse(5)).values == C.values
    P = GenusSequence([3, 1, F(2, 7)])
    assert convolve(impulse(2), P).values == P.values
    assert convolve(GenusSequence([1, F(-1, 12)]), GenusSequence([1, F(-1, 12)])).values == (1, F(-1, 6))


def test_deconvolve_examples():
    P = GenusSequence([F(2, 3), 5, -1, F(1, 9)])
    assert deconvolve(P, P).values == impulse(3).values
    H = GenusSequence([F((-1) ** g, factorial(2 * g + 1)) for g in range(6)])
    assert deconvolve(H, impulse(5)).values == H.values


def test_deconvolve_errors():
    with pytest.raises(SingularSystem):
        deconvolve(GenusSequence([1, 2]), GenusSequence([0, 1]))
    with pytest.raises(LengthMismatch):
        deconvolve(GenusSequence([1, 2]), GenusSequence([1, 2, 3]))
    with pytest.raises(LengthMismatch):
        convolve(GenusSequence([1]), GenusSequence([1, 2]))


def test_closed_form_low_genus():
    assert closed_form(K.POINT_PRIMARY, 2).values == (1, F(-1, 12), F(1, 360))
    assert closed_form(K.EXCEPTIONAL_TAU, 2).values == (1, F(1, 3), F(-1, 60))
    assert closed_form(K.CURVE, 1).values == (1, F(-1, 24))
    assert closed_form(K.POINT_DESCENDANT, 0).values == (1,)


@pytest.mark.parametrize("kind,expr", [
    (K.POINT_PRIMARY, "(sin(u/2)/(u/2))**2"),
    (K.POINT_DESCENDANT, "sin(u)/u"),
    (K.EXCEPTIONAL_TAU, "3 - 2*sin(u)/u"),
    (K.CURVE, "sin(u/2)/(u/2)"),
])
def test_closed_forms_match_analytic(kind, expr):
    assert closed_form(kind, 10).values == even_coeffs(expr, 10)


@pytest.mark.parametrize("kind", list(K))
@pytest.mark.parametrize("order", [0, 1, 10])
def test_verify_closed_form(kind, order):
    report = verify_closed_form(kind, order)
    assert report.passed
    assert report.to_json()["passed"] is True


def test_localization_data_present_for_every_kind():
    assert set(LOCALIZATION_DATA) == set(K)


def test_apply_blowup_examples():
    assert apply_blowup(K.POINT_PRIMARY, impulse(6)).values == closed_form(K.POINT_PRIMARY, 6).values
    curve = apply_blowup(K.CURVE, impulse(6)).values
    assert curve == tuple(F((-1) ** g, factorial(2 * g + 1) * 4 ** g) for g in range(7))
    for kind in K:
        assert apply_blowup(kind, GenusSequence([0] * 5)).values == (0,) * 5


def test_generating_function_examples():
    assert generating_function_check(impulse(4)).passed
    shifted = GenusSequence([0, 0, 0, 1, 0, 0, 0, 0, 0])
    assert generating_function_check(shifted).passed
    H = apply_blowup(K.POINT_PRIMARY, shifted)
    assert H.values[3:] == closed_form(K.POINT_PRIMARY, 5).values
    rng = random.Random(5)
    P = GenusSequence([F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(9)])
    assert generating_function_check(P).passed
    assert apply_blowup(K.POINT_PRIMARY, P).values == cauchy(even_coeffs("(sin(u/2)/(u/2))**2", 8), P.values)


def test_kind_parse():
    assert K.parse("point_primary") is K.POINT_PRIMARY
    assert K.parse("Curve") is K.CURVE
    with pytest.raises(ValueError):
        K.parse("surface")
