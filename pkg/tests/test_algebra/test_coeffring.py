"""
Tests for exact coefficient arithmetic.

This module tests:
- Rational coercion and rendering
- Polynomial ring operations and exact division
- Unit detection and specialization
"""
from fractions import Fraction

import pytest

from src.algebra.coeffring import (
    QQ_U,
    U,
    Poly,
    exact_div,
    is_unit,
    is_zero,
    poly_arith,
    poly_eval,
    render,
    specialize,
    to_coefficient,
    unit_inverse,
)
from src.utils.exceptions import DivisionByZero, InexactDivision, UnsupportedCoefficient
from tests.utils.factories import random_poly, random_rational


class TestCoercion:
    """Tests for to_coefficient."""

    def test_int_and_string(self):
        assert to_coefficient(3) == Fraction(3)
        assert to_coefficient("1/2") == Fraction(1, 2)
        assert to_coefficient(" -57/16 ") == Fraction(-57, 16)

    def test_poly_passes_through(self):
        assert to_coefficient(U) is U

    def test_float_rejected(self):
        with pytest.raises(UnsupportedCoefficient):
            to_coefficient(0.5)


class TestPoly:
    """Tests for polynomial arithmetic in u."""

    def test_normalizes_trailing_zeros(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly((0, 0)).degree == -1

    def test_ring_operations(self):
        p = 1 - U
        assert p * p == Poly((1, -2, 1))
        assert (p ** 3).coeffs == (1, -3, 3, -1)
        assert U + 2 == Poly((2, 1))
        assert 3 - U == Poly((3, -1))

    def test_constant_poly_equals_rational(self):
        assert Poly((5,)) == 5
        assert Fraction(5) == Poly((5,))
        assert hash(Poly((5,))) == hash(Fraction(5))

    def test_exact_division(self):
        product = (U - 1) * (U ** 2 + U + 3)
        assert product.exact_div(U - 1) == U ** 2 + U + 3
        assert exact_div(product, U ** 2 + U + 3) == U - 1

    def test_inexact_division_raises(self):
        with pytest.raises(InexactDivision):
            (U ** 2 + 1).exact_div(U - 1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            U / 0

    def test_evaluation(self):
        p = U ** 4 - 3 * U ** 3 + 4 * U ** 2 - 3 * U + 2
        assert p(1) == 1
        assert specialize(p, 0) == 2
        assert specialize(Fraction(7, 3), 5) == Fraction(7, 3)

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            U ** -1

    def test_poly_arith(self):
        assert poly_arith("add", U, 1) == U + 1
        assert poly_arith("sub", U, U) == 0
        assert poly_arith("mul", 1 - U, 1 + U) == 1 - U ** 2
        assert poly_arith("exact_div", 1 - U ** 2, 1 + U) == 1 - U
        with pytest.raises(ValueError):
            poly_arith("pow", U, U)

    def test_backed_by_sympy_ring(self):
        u = QQ_U.gens[0]
        assert (U ** 2 - 1).element == u ** 2 - 1
        assert Poly.variable().element.ring == QQ_U
        assert (U / 2).coeffs == (0, Fraction(1, 2))

    def test_poly_eval(self):
        assert poly_eval(Poly((0,)), Fraction(3)) == 0
        assert poly_eval(1 - 5 * U + U ** 2, Fraction(1, 2)) == Fraction(-5, 4)


class TestUnits:
    """Tests for unit detection and inversion."""

    def test_rational_units(self):
        assert is_unit(Fraction(-2, 3))
        assert not is_unit(Fraction(0))
        assert unit_inverse(Fraction(-2, 3)) == Fraction(-3, 2)

    def test_polynomial_units_are_nonzero_constants(self):
        assert is_unit(Poly((4,)))
        assert not is_unit(U)
        assert not is_unit(Poly(()))
        assert unit_inverse(Poly((4,))) == Fraction(1, 4)

    def test_non_unit_inverse_raises(self):
        with pytest.raises(UnsupportedCoefficient):
            unit_inverse(1 + U)

    def test_is_zero(self):
        assert is_zero(Poly(()))
        assert is_zero(Fraction(0))
        assert not is_zero(U)


class TestRender:
    """Tests for canonical text rendering."""

    def test_rationals(self):
        assert render(Fraction(3)) == "3"
        assert render(Fraction(-57, 16)) == "-57/16"

    def test_polynomials(self):
        assert render(1 - U) == "1 - u"
        assert render(U ** 2 - 8 * U + 12) == "12 - 8*u + u^2"
        assert render(-U) == "-u"
        assert render(Fraction(1, 2) * U ** 3) == "1/2*u^3"

    def test_variable_name(self):
        assert render(2 - 2 * U, "s") == "2 - 2*s"

    def test_zero_polynomial(self):
        assert render(Poly(())) == "0"


@pytest.mark.unit
class TestRingProperties:
    """Seeded ring identities over Q and Q[u]."""

    def test_exact_div_recovers_factor(self, rng):
        for _ in range(25):
            p, q = random_poly(rng), random_poly(rng)
            assert exact_div(p * q, q) == p
            assert poly_arith("exact_div", p * q, p) == q

    def test_evaluation_respects_ring_operations(self, rng):
        for _ in range(25):
            p, q, x = random_poly(rng), random_poly(rng), random_rational(rng)
            assert specialize(p * q, x) == specialize(p, x) * specialize(q, x)
            assert specialize(p + q, x) == specialize(p, x) + specialize(q, x)
            assert poly_eval(p - q, x) == poly_eval(p, x) - poly_eval(q, x)

    @pytest.mark.parametrize("build", [random_rational, random_poly], ids=["rational", "poly"])
    def test_commutative_ring_axioms(self, rng, build):
        for _ in range(25):
            a, b, c = build(rng), build(rng), build(rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
