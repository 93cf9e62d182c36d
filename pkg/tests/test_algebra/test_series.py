"""
Tests for truncated power series.

This module tests:
- Construction and truncation rules
- Ring operations and division
- Composition, reversion and square roots
- Error conditions
"""
from fractions import Fraction

import pytest

from src.algebra.coeffring import U
from src.algebra.families import catalan, ternary
from src.algebra.series import Series, series_arith, solve_gk
from src.utils.exceptions import (
    BadConstantTerm,
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotRevertible,
    TruncationExceeded,
)
from tests.utils.assertions import assert_coeffs, assert_series_agree
from tests.utils.factories import random_revertible, random_series, random_unit_series


class TestConstruction:
    """Tests for series construction and shape."""

    def test_pads_and_truncates_to_order(self):
        assert Series((1, 2), 4).coeffs == (1, 2, 0, 0, 0)
        assert Series((1, 2, 3, 4), 1).coeffs == (1, 2)

    def test_mixed_orders_truncate_to_smaller(self):
        total = Series((1, 1, 1, 1), 3) + Series((1, 1), 1)
        assert total.order == 1
        assert total.coeffs == (2, 2)

    def test_coeff_beyond_order_raises(self):
        with pytest.raises(TruncationExceeded):
            Series((1,), 2).coeff(3)

    def test_truncate_cannot_extend(self):
        with pytest.raises(TruncationExceeded):
            Series((1,), 2).truncate(5)

    def test_shift_down_needs_zero_low_terms(self):
        assert Series((0, 0, 3, 4), 3).shift_down(2).coeffs == (3, 4)
        with pytest.raises(NonUnitConstantTerm):
            Series((0, 1, 2), 2).shift_down(2)

    def test_equality_includes_order(self):
        assert Series((1, 2), 1) != Series((1, 2), 2)
        assert Series((1, 2), 1).agrees_with(Series((1, 2), 2))


class TestArithmetic:
    """Tests for ring operations and division."""

    def test_geometric_series(self):
        x = Series.variable(6)
        assert_coeffs(1 / (1 - x), [1] * 7)
        assert_coeffs((1 - x) ** -2, [1, 2, 3, 4, 5, 6, 7])

    def test_division_round_trip(self, rng, order):
        for _ in range(5):
            a = random_series(rng, order)
            b = random_unit_series(rng, order)
            assert (a / b) * b == a

    def test_division_by_non_unit_raises(self):
        with pytest.raises(NonUnitConstantTerm):
            Series((1, 1), 3) / Series((0, 1), 3)

    def test_polynomial_coefficients(self):
        g = Series((1, U, U), 4) / Series((1, 1), 4) ** 2
        assert g.coeff(1) == U - 2
        assert g.specialize(0).coeffs == (1, -2, 3, -4, 5)

    def test_scale_argument(self):
        assert Series((1, 1, 1, 1), 3).scale_argument(-2).coeffs == (1, -2, 4, -8)

    def test_series_arith(self):
        x = Series.variable(4)
        one = Series.one(4)
        assert_coeffs(series_arith("add", one, x), [1, 1, 0, 0, 0])
        assert_coeffs(series_arith("sub", one, x), [1, -1, 0, 0, 0])
        assert_coeffs(series_arith("mul", one + x, one - x), [1, 0, -1, 0, 0])
        assert_coeffs(series_arith("div", one, one - x), [1, 1, 1, 1, 1])
        with pytest.raises(ValueError):
            series_arith("compose", one, x)


class TestComposition:
    """Tests for compose, revert and sqrt1."""

    def test_compose_requires_zero_constant(self):
        with pytest.raises(NonzeroConstantInner):
            Series((1, 1), 3).compose(Series((1, 1), 3))

    def test_catalan_functional_equation(self, order):
        c = catalan(order)
        x = Series.variable(order)
        assert c == 1 + x * c * c
        assert_coeffs(c, [1, 1, 2, 5, 14, 42, 132])

    def test_ternary_functional_equation(self, order):
        t = ternary(order)
        x = Series.variable(order)
        assert t == 1 + x * t ** 3
        assert_coeffs(t, [1, 1, 3, 12, 55, 273, 1428])

    def test_solve_gk_matches_catalan(self, order):
        assert solve_gk(2, order) == catalan(order)

    def test_reversion_round_trip(self, rng, order):
        x = Series.variable(order)
        for _ in range(5):
            f = random_revertible(rng, order)
            fbar = f.revert()
            assert_series_agree(f.compose(fbar), x)
            assert_series_agree(fbar.compose(f), x)

    def test_revert_x_over_one_plus_x_squared(self, order):
        x = Series.variable(order)
        c = catalan(order)
        assert_series_agree((x / (1 + x) ** 2).revert(), x * c * c)

    def test_not_revertible(self):
        with pytest.raises(NotRevertible):
            Series((0, 0, 1), 4).revert()
        with pytest.raises(NotRevertible):
            Series((1, 1), 4).revert()

    def test_sqrt1(self, rng, order):
        for _ in range(5):
            a = random_series(rng, order, constant=1)
            assert a.sqrt1() ** 2 == a

    def test_sqrt1_catalan_closed_form(self, order):
        radical = Series((1, -4), order + 1).sqrt1()
        c = ((1 - radical).shift_down(1) * Fraction(1, 2)).truncate(order)
        assert c == catalan(order)

    def test_sqrt1_needs_constant_one(self):
        with pytest.raises(BadConstantTerm):
            Series((4, 1), 3).sqrt1()
