from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedposets.series import (
    BivariateSeries,
    NonIntegralCoefficient,
    NonzeroInnerConstant,
    PowerSeries,
    ZeroConstantTerm,
    named_series,
)

N = 8
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(coeff, min_size=N + 1, max_size=N + 1).map(lambda c: PowerSeries(c, N))
unit = series.filter(lambda s: s[0] != 0)
inner = st.lists(coeff, min_size=N, max_size=N).map(lambda c: PowerSeries([0] + c, N))


def test_geometric_series():
    x = PowerSeries.x(6)
    assert (1 / (1 - x)).ogf_counts() == [1] * 7


def test_exp_log_roundtrip():
    e1 = named_series("exp_minus_one", 10)
    assert named_series("log_one_plus", 10).compose(e1) == PowerSeries.x(10)


def test_catalan_sqrt():
    x = PowerSeries.x(9)
    c = (1 - (1 - 4 * x).sqrt()).shift_divide(1) / 2
    assert c.ogf_counts()[:9] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_fubini_numbers():
    assert (1 / (2 - named_series("exp", 7))).egf_counts() == [1, 1, 3, 13, 75, 541, 4683, 47293]


def test_invert_needs_constant():
    with pytest.raises(ZeroConstantTerm):
        PowerSeries.x(4).invert()


def test_compose_needs_zero_constant():
    with pytest.raises(NonzeroInnerConstant):
        PowerSeries.x(4).compose(PowerSeries.one(4))


def test_integrality_guard():
    with pytest.raises(NonIntegralCoefficient):
        PowerSeries([Fraction(1, 2)]).ogf_counts()
    with pytest.raises(NonIntegralCoefficient):
        PowerSeries([0, 0, Fraction(1, 3)]).egf_counts()


def test_subs_power():
    g = named_series("geom", 9).subs_power(3)
    assert g.ogf_counts() == [0, 0, 0, 1, 0, 0, 1, 0, 0, 1]


def test_borel_laplace():
    e = named_series("exp", 6)
    assert e.laplace().ogf_counts() == [1] * 7
    assert e.laplace().borel() == e


@settings(max_examples=60, deadline=None)
@given(unit)
def test_inverse(a):
    assert a * a.invert() == PowerSeries.one(N)


@settings(max_examples=40, deadline=None)
@given(series, inner, inner)
def test_compose_associative(a, f, g):
    assert a.compose(f).compose(g) == a.compose(f.compose(g))


@settings(max_examples=40, deadline=None)
@given(series, series, inner)
def test_compose_is_ring_map(a, b, f):
    assert (a * b).compose(f) == a.compose(f) * b.compose(f)


@settings(max_examples=40, deadline=None)
@given(series.map(lambda s: s * s + 1))
def test_sqrt_squares_back(a):
    if a[0] == 1:
        assert a.sqrt() ** 2 == a


@settings(max_examples=30, deadline=None)
@given(series)
def test_trictionary_substitutions_invert(a):
    for fwd, back in (("exp_minus_one", "log_one_plus"), ("one_minus_exp_neg", "neg_log_one_minus")):
        assert a.compose(named_series(fwd, N)).compose(named_series(back, N)) == a


def test_bivariate_product_is_binomial():
    e = BivariateSeries.exp_linear
    assert e(1, 2, 6) * e(3, -1, 6) == e(4, 1, 6)
    assert e(1, 1, 6) * e(-1, -1, 6) == BivariateSeries.one(6)


def test_bivariate_invert_and_diagonal():
    a = BivariateSeries.exp_linear(1, 0, 5) + BivariateSeries.exp_linear(0, 1, 5)
    inv = a.invert()
    assert a * inv == BivariateSeries.one(5)
    # e^(x + y) on the diagonal is e^(2x)
    assert BivariateSeries.exp_linear(1, 1, 5).diagonal().egf_counts() == [2**k for k in range(6)]
