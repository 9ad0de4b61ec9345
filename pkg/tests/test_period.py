from fractions import Fraction

import pytest

from tangential_period import fixtures
from tangential_period.field import polynomial_field, reparametrized_field
from tangential_period.halfreturn import center_check
from tangential_period.period import (
    NotACenterError, corollary_values, half_period_series, period_constants,
    scaled_flow_series, tilde_period,
)
from tangential_period.series import Series1, TruncationError

from conftest import cubic_center, random_centers

F = Fraction
MINUS_X = Series1.polynomial([0, -1], 6)


def test_scaled_flow_examples():
    e1 = fixtures.e1()
    plus = scaled_flow_series(e1, 1, MINUS_X, 3)
    assert plus.coeffs[2] == (F(0), F(2), F(-2))
    assert all(not any(c) for i, c in enumerate(plus.coeffs) if i != 2)
    minus = scaled_flow_series(e1, -1, MINUS_X, 3)
    assert minus.coeffs[2] == (F(0), F(-2), F(2))
    assert not any(plus.coeffs[0])


def test_half_period_examples():
    assert half_period_series(fixtures.e1(), 1, MINUS_X, 4) == Series1.polynomial([0, -2], 4)
    assert half_period_series(fixtures.e1(), -1, MINUS_X, 4) == Series1.polynomial([0, 2], 4)
    assert half_period_series(fixtures.e2(), 1, MINUS_X, 4) == Series1.polynomial([0, -1], 4)


@pytest.mark.parametrize("make,order,want", [
    (fixtures.e1, 4, (0, 4, 0, 0, 0)),
    (fixtures.e2, 3, (0, 3, 0, 0)),
    (fixtures.e3, 3, (0, 4, 0, 0)),
])
def test_period_examples(make, order, want):
    assert period_constants(make(), order).That == tuple(F(v) for v in want)


def test_cubic_center_has_cubic_term():
    data = period_constants(cubic_center(), 4)
    assert data.That[:3] == (0, 4, 0)
    assert data.That[3] != 0


def test_not_a_center():
    with pytest.raises(NotACenterError) as info:
        period_constants(fixtures.e5(), 4)
    assert info.value.first_mismatch_index == 2
    assert "not a center to requested order" in str(info.value)


def test_order_beyond_data():
    with pytest.raises(TruncationError):
        period_constants(fixtures.e3(6), 6)


def test_corollary_examples():
    assert corollary_values(fixtures.e1()) == (0, 4)
    assert corollary_values(fixtures.e2()) == (0, 3)
    for c in (F(1, 2), 3, 7):
        field = polynomial_field(({(0, 0): c}, {(1, 0): -1}), ({(0, 0): -c}, {(1, 0): -1}), 3)
        assert corollary_values(field) == (0, F(4) / c)


def test_tilde_examples():
    assert tilde_period(MINUS_X) == Series1.polynomial([0, 4], 6)
    assert tilde_period(Series1.polynomial([0, -1, 1], 3)) == Series1.polynomial([0, 4, -2], 3)
    assert tilde_period(MINUS_X)(0.0) == 0


@pytest.fixture(scope="module")
def centers():
    return random_centers(20, seed=31) + [
        fixtures.e1(), fixtures.e2(), fixtures.e3(), fixtures.e2_quartic(), cubic_center()]


def test_corollary_agreement_and_positivity(centers):
    for field in centers:
        data = period_constants(field)
        assert data.That[:2] == corollary_values(field)
        assert data.That[1] > 0
        assert data.Tplus[1] * data.Tminus[1] < 0
        assert data.delta * (data.Tminus[1] - data.Tplus[1]) > 0


def test_reparametrized_period_is_tilde(centers):
    for field in centers:
        rep = reparametrized_field(field)
        data = period_constants(rep)
        phi = center_check(field, data.order).phi
        assert data.T == tilde_period(phi).truncate(data.order)


def test_period_not_constant(centers):
    for field in centers:
        T = period_constants(field).T
        assert any(T[i] for i in range(1, T.order + 1))
