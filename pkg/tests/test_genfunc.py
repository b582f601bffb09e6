import pytest
from hypothesis import given, strategies as st

from ncolour.formulas import binomial
from ncolour.genfunc import (
    IntPolynomial,
    RationalSeries,
    SeriesError,
    expand,
    gf_compositions,
    gf_compositions_m,
    gf_of,
    truncated_product,
)
from ncolour.sequences import SequenceId, seq

from .oracles import fib

P = IntPolynomial


def test_polynomial_normalisation():
    assert P((1, 2, 0, 0)).coefficients == (1, 2)
    assert P((0, 0)).is_zero()
    assert P.descending([1, -3, 1]) == P((1, -3, 1))
    assert P.descending([1, 0]) == P((0, 1))
    assert P.parse("1, -3,1") == P((1, -3, 1))
    assert P.monomial(3) == P((0, 0, 0, 1))
    assert str(P((1, -3, 1))) == "1 - 3*q + q^2"
    with pytest.raises(ValueError):
        P.parse("1,x")


@pytest.mark.parametrize("num, den, n, expected", [
    ((1, 1), (1, -3, 1), 5, [1, 4, 11, 29, 76]),
    ((0, 1), (1, -3, 1), 5, [0, 1, 3, 8, 21]),
    ((1,), (1, -1), 4, [1, 1, 1, 1]),
    ((1,), (-1, 1), 3, [-1, -1, -1]),
    # 2/(2 - 2q) = 1/(1-q): non-unit constant but every division is exact
    ((2,), (2, -2), 4, [1, 1, 1, 1]),
])
def test_expand(num, den, n, expected):
    assert expand(RationalSeries(P(num), P(den)), n) == expected


def test_expand_errors():
    with pytest.raises(SeriesError):
        RationalSeries(P((1,)), P((0, 1)))
    with pytest.raises(SeriesError):
        expand(RationalSeries(P((1,)), P((2, 1))), 3)
    with pytest.raises(ValueError):
        expand(gf_of(SequenceId.A), 0)


def test_gf_of_shapes():
    a = gf_of(SequenceId.A)
    assert a.numerator.coefficients == (1, 1)
    assert a.denominator.coefficients == (1, -3, 1)
    assert gf_of(SequenceId.D).numerator.coefficients == (0, 3)
    assert expand(gf_of(SequenceId.C), 4) == [0, 2, 6, 16]


@pytest.mark.parametrize("ident", list(SequenceId))
def test_coefficients_match_recurrence(ident):
    coeffs = expand(gf_of(ident), 51)
    for n in range(ident.first_index, 51):
        assert coeffs[n] == seq(ident, n)
    if ident is not SequenceId.A:
        assert coeffs[0] == 0


def test_b_plus_c_is_d():
    b, c, d = (expand(gf_of(i), 50) for i in (SequenceId.B, SequenceId.C, SequenceId.D))
    assert [x + y for x, y in zip(b, c)] == d


def test_all_compositions():
    assert expand(gf_compositions(), 30) == [fib(2 * n) for n in range(30)]


def test_compositions_by_parts():
    assert expand(gf_compositions_m(1), 5) == [0, 1, 2, 3, 4]
    assert expand(gf_compositions_m(2), 5)[4] == 10
    assert expand(gf_compositions_m(3), 3)[2] == 0
    # (1-q)^4 by binomial expansion
    assert gf_compositions_m(2).denominator.coefficients == (1, -4, 6, -4, 1)
    for m in range(1, 7):
        coeffs = expand(gf_compositions_m(m), 21)
        assert coeffs == [binomial(nu + m - 1, 2 * m - 1) if nu >= 1 else 0 for nu in range(21)]


def test_sum_over_parts_is_total():
    total = [0] * 15
    for m in range(1, 15):
        for i, c in enumerate(expand(gf_compositions_m(m), 15)):
            total[i] += c
    assert total == expand(gf_compositions(), 15)


@given(
    st.lists(st.integers(-20, 20), max_size=6),
    st.lists(st.integers(-20, 20), max_size=5),
    st.sampled_from([1, -1]),
    st.integers(1, 30),
)
def test_round_trip_exactness(num, den_tail, lead, count):
    series = RationalSeries(P(tuple(num)), P((lead,) + tuple(den_tail)))
    coeffs = expand(series, count)
    back = truncated_product(coeffs, series.denominator)
    assert back == [series.numerator[i] for i in range(count)]


def test_polynomial_product():
    assert P((1, -1)) * P((1, 1)) == P((1, 0, -1))
    assert (P((1, -1)) * P(())).is_zero()
