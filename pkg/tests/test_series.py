from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwcalc.errors import ParseError, ZeroConstantTerm
from gwcalc.series import (
    EvenSeries,
    format_rational,
    parse_rational,
    series_add,
    series_inverse,
    series_mul,
    series_pow,
    sin_u_over_u,
    sinc_half,
    sinc_scaled,
    unit_series,
    zero_series,
)

from oracles import even_coeffs

F = Fraction
fracs = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
nonzero = st.builds(Fraction, st.integers(1, 40) | st.integers(-40, -1), st.integers(1, 12))
series3 = st.lists(fracs, min_size=4, max_size=4).map(EvenSeries)
invertible3 = st.tuples(nonzero, st.lists(fracs, min_size=3, max_size=3)).map(lambda t: EvenSeries([t[0], *t[1]]))


def test_add_examples():
    assert series_add(EvenSeries([1, F(-1, 12)]), EvenSeries([0, F(1, 12)])).coeffs == (1, 0)
    a = sinc_half(3)
    assert a + zero_series(3) == a
    assert sinc_half(2) + sinc_half(2) == sinc_half(2).scale(2)


def test_mul_examples():
    a = EvenSeries([1, F(-1, 12), F(1, 360)])
    assert series_mul(a, EvenSeries([1, 0, 0])) == a
    assert series_mul(sinc_half(3), sinc_half(3)).coeffs == (1, F(-1, 12), F(1, 360), F(-1, 20160))
    assert series_mul(EvenSeries([1, F(-1, 6)]), EvenSeries([1, F(1, 6)])).coeffs == (1, 0)


def test_mul_truncates_to_shorter_operand():
    assert series_mul(sinc_half(5), sinc_half(2)).order == 2


def test_inverse_examples():
    assert series_inverse(unit_series(4)) == unit_series(4)
    assert series_inverse(sinc_half(2)).coeffs == (1, F(1, 24), F(7, 5760))
    assert series_inverse(EvenSeries([2, 0])).coeffs == (F(1, 2), 0)
    assert series_inverse(sinc_half(8)).coeffs == even_coeffs("(u/2)/sin(u/2)", 8)


def test_inverse_of_zero_constant_term():
    with pytest.raises(ZeroConstantTerm):
        series_inverse(EvenSeries([0, 1]))
    with pytest.raises(ZeroConstantTerm):
        series_pow(EvenSeries([0, 1]), -1)


def test_pow_examples():
    assert series_pow(sinc_half(6), 0) == unit_series(6)
    s = series_pow(sinc_half(4), -2)
    assert s.coeffs[:3] == (1, F(1, 12), F(1, 240))
    assert series_mul(s, series_pow(sinc_half(4), 2)) == unit_series(4)
    for k in (-3, -1, 3, 5):
        assert series_pow(sinc_half(6), k).coeffs == even_coeffs(f"(sin(u/2)/(u/2))**({k})", 6)


def test_sinc_half_values():
    s = sinc_half(10)
    assert s[0] == 1 and s[1] == F(-1, 24) and s[2] == F(1, 1920)
    assert s.coeffs == even_coeffs("sin(u/2)/(u/2)", 10)


def test_sinc_scaled():
    assert sinc_scaled(1, 6) == sinc_half(6)
    s = sinc_scaled(2, 6)
    assert s[0] == 2 and s[1] == F(-1, 3)
    assert s.coeffs == even_coeffs("sin(u)/(u/2)", 6)
    for d in (2, 3, 5):
        # d * sinc(d u / 2): the u^(2g) coefficient scales by d^(2g+1)
        assert all(c == d ** (2 * g + 1) * b for g, (c, b) in enumerate(zip(sinc_scaled(d, 6), sinc_half(6))))


def test_sin_u_over_u():
    assert sin_u_over_u(8).coeffs == even_coeffs("sin(u)/u", 8)


def test_equality_over_common_range():
    assert EvenSeries([1, 2]) == EvenSeries([1, 2, 3])
    assert EvenSeries([1, 2]) != EvenSeries([1, 3, 3])
    with pytest.raises(TypeError):
        hash(EvenSeries([1]))


def test_out_of_range_index():
    with pytest.raises(IndexError):
        sinc_half(2)[3]


def test_floats_refused():
    with pytest.raises(TypeError):
        EvenSeries([0.5])


def test_rational_text_round_trip():
    assert parse_rational("-7/12") == F(-7, 12)
    assert parse_rational("3") == 3
    assert format_rational(F(-7, 12)) == "-7/12"
    assert format_rational(F(4)) == "4"
    with pytest.raises(ParseError, match="values\\[2\\]"):
        parse_rational("1/0", "values[2]")
    with pytest.raises(ParseError, match="c1"):
        parse_rational("x", "c1")


@settings(max_examples=60, deadline=None)
@given(series3, series3, series3)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == zero_series(3)


@settings(max_examples=60, deadline=None)
@given(invertible3, st.integers(-4, 4), st.integers(-4, 4))
def test_power_laws(a, j, k):
    assert series_pow(a, j) * series_pow(a, k) == series_pow(a, j + k)
    assert series_mul(a, series_inverse(a)) == unit_series(3)
