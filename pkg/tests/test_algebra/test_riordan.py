"""
Tests for Riordan pairs and the group operations.

This module tests:
- Pair validation and matrix realization
- The group law against matrix multiplication
- Involution checks and their witnesses
- A- and Z-sequences and production matrices
- Moment extraction from parameterized families
"""
from fractions import Fraction

import pytest

from src.algebra.coeffring import U, specialize
from src.algebra.families import general_family, k_theorem_family, pascal, signed_pascal
from src.algebra.riordan import (
    RiordanPair,
    apply,
    az_sequences,
    involution_check,
    inverse_from_az,
    moment_array_pair,
    moment_coefficient_array,
    moment_polys,
    pair_from_az,
    production_matrix,
    rinv,
    rmul,
)
from src.algebra.series import Series
from src.utils.exceptions import (
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotRevertible,
    TruncationExceeded,
    UnsupportedCoefficient,
)
from src.verification import golden
from tests.utils.assertions import (
    assert_coeffs,
    assert_involution,
    assert_not_involution,
    assert_rows,
    assert_same_matrix,
    assert_series_agree,
)
from tests.utils.factories import random_pair


def geometric_pair(k, order: int) -> RiordanPair:
    """(1/(1 - kx), x/(1 - kx)), the k-th power of Pascal's array."""
    denominator = Series((1, -k), order)
    return RiordanPair(1 / denominator, Series.variable(order) / denominator)


@pytest.mark.unit
class TestRiordanPair:
    """Test pair validation and realization."""

    def test_pascal_matrix(self):
        assert_rows(pascal(5).to_matrix(4), [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]])

    def test_entry_matches_matrix(self, rng, order):
        pair = random_pair(rng, order)
        matrix = pair.to_matrix(order + 1)
        for n in range(order + 1):
            for k in range(n + 1):
                assert pair.entry(n, k) == matrix.entry(n, k)

    def test_rejects_non_unit_g0(self):
        with pytest.raises(NonUnitConstantTerm):
            RiordanPair(Series((0, 1), 3), Series((0, 1), 3))

    def test_rejects_nonzero_f0(self):
        with pytest.raises(NonzeroConstantInner):
            RiordanPair(Series((1,), 3), Series((1, 1), 3))

    def test_rejects_non_unit_f1(self):
        with pytest.raises(NotRevertible):
            RiordanPair(Series((1,), 3), Series((0, 0, 1), 3))
        with pytest.raises(NotRevertible):
            RiordanPair(Series((1,), 3), Series((0, U), 3))

    def test_rejects_mixed_orders(self):
        with pytest.raises(ValueError):
            RiordanPair(Series((1,), 3), Series((0, 1), 4))

    def test_of_truncates_to_common_order(self):
        pair = RiordanPair.of(Series((1, 1), 6), Series((0, 1), 4))
        assert pair.order == 4

    def test_matrix_beyond_order_raises(self):
        with pytest.raises(TruncationExceeded):
            pascal(3).to_matrix(5)


@pytest.mark.unit
class TestGroupLaw:
    """Test multiplication, inversion and powers."""

    def test_product_matches_matrix_product(self, rng, order):
        for _ in range(3):
            r1, r2 = random_pair(rng, order), random_pair(rng, order)
            n = order + 1
            assert_same_matrix(rmul(r1, r2).to_matrix(n), r1.to_matrix(n) @ r2.to_matrix(n))

    def test_inverse(self, rng, order):
        identity = RiordanPair.identity(order)
        for _ in range(3):
            r = random_pair(rng, order)
            inverse = rinv(r)
            assert (r * inverse) == identity
            assert (inverse * r) == identity

    def test_associativity(self, rng, order):
        a, b, c = (random_pair(rng, order) for _ in range(3))
        assert (a * b) * c == a * (b * c)

    def test_pascal_powers(self, order):
        assert pascal(order) ** 3 == geometric_pair(3, order)
        assert pascal(order) ** -1 == geometric_pair(-1, order)
        assert pascal(order) ** 0 == RiordanPair.identity(order)

    def test_action(self, order):
        x = Series.variable(order)
        result = apply(pascal(order), 1 / (1 - x))
        assert_coeffs(result, [2 ** n for n in range(order + 1)])

    def test_action_is_matrix_times_vector(self, rng, order):
        pair = random_pair(rng, order)
        h = Series([rng.randint(-3, 3) for _ in range(order + 1)], order)
        assert list(pair.act(h).coeffs) == pair.to_matrix(order + 1).apply(h.coeffs)

    def test_with_g_power(self, order):
        squared = pascal(order).with_g_power(2)
        assert_coeffs(squared.g, [n + 1 for n in range(order + 1)])
        assert squared.f == pascal(order).f


@pytest.mark.unit
class TestInvolutionCheck:
    """Test the two-route involution decision."""

    def test_signed_pascal_is_involution(self, size):
        assert_involution(signed_pascal(size - 1), size)

    def test_pascal_is_not(self):
        result = involution_check(pascal(6), 4)
        assert not result.holds
        assert result.witness[:2] == (1, 0)
        assert result.witness[2] == 2
        assert result.witness[3] == 0

    def test_random_pair_is_not(self, rng, order):
        assert_not_involution(random_pair(rng, order) * pascal(order), order + 1)

    def test_conjugate_of_involution(self, rng, order):
        r = random_pair(rng, order)
        assert_involution(r * signed_pascal(order) * r.inverse(), order + 1)

    def test_size_beyond_order_raises(self):
        with pytest.raises(TruncationExceeded):
            involution_check(signed_pascal(5), 8)


@pytest.mark.unit
class TestAZSequences:
    """Test A/Z sequences and production matrices."""

    def test_pascal_sequences(self, order):
        a_seq, z_seq = az_sequences(pascal(order))
        assert_coeffs(a_seq, [1, 1, 0, 0])
        assert_coeffs(z_seq, [1, 0, 0, 0])

    def test_pair_from_sequences(self, rng, order):
        for _ in range(3):
            r = random_pair(rng, order)
            rebuilt = pair_from_az(*az_sequences(r), g0=r.g.coeff(0))
            assert_series_agree(rebuilt.g, r.g)
            assert_series_agree(rebuilt.f, r.f)

    def test_inverse_from_sequences(self, rng, order):
        r = random_pair(rng, order)
        via_az = inverse_from_az(r)
        direct = r.inverse()
        assert_series_agree(via_az.g, direct.g)
        assert_series_agree(via_az.f, direct.f)

    def test_pascal_production_matrix(self):
        matrix = production_matrix(pascal(6), 4)
        expected = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
        assert [list(row) for row in matrix.rows] == expected
        assert matrix.is_tridiagonal()

    def test_routes_agree_on_random_pairs(self, rng):
        for _ in range(3):
            matrix = production_matrix(random_pair(rng, 8), 6)
            assert matrix.n == 6

    def test_production_size_beyond_order_raises(self):
        with pytest.raises(TruncationExceeded):
            production_matrix(pascal(4), 5)


@pytest.mark.unit
class TestMoments:
    """Test moment extraction over Q[u]."""

    def test_general_family_moments(self):
        array = moment_coefficient_array(general_family(3, 2, 6), 7)
        assert_rows(array, golden.GENERAL_3_2_ROWS)

    def test_ternary_moment_polynomials(self):
        assert moment_polys(k_theorem_family(3, 3, 4), 5) == golden.TERNARY_MOMENT_POLYS

    def test_moments_specialize_to_first_column(self):
        family = general_family(3, 2, 6)
        polys = moment_polys(family, 7)
        at_two = family.g.specialize(2)
        first_column = RiordanPair(at_two, family.f).inverse().g
        assert [specialize(p, 2) for p in polys] == list(first_column.coeffs)

    def test_parameter_in_f_rejected(self):
        family = RiordanPair(Series.one(4), Series((0, 1, U), 4))
        with pytest.raises(UnsupportedCoefficient):
            moment_polys(family, 3)

    def test_moment_array_pair_matches_direct_route(self):
        x = Series.variable(6)
        one_plus_x = Series((1, 1), 6)
        pair = moment_array_pair(x * one_plus_x ** 2, one_plus_x ** 3, x / one_plus_x ** 3)
        direct = moment_coefficient_array(k_theorem_family(3, 3, 6), 7)
        assert_same_matrix(pair.to_matrix(7), direct)

    def test_moment_array_pair_needs_h0_zero(self):
        with pytest.raises(NonzeroConstantInner):
            moment_array_pair(Series((1, 1), 3), Series.one(3), Series.variable(3))

    def test_rational_coefficient_family(self):
        family = RiordanPair(Series((1, Fraction(1, 2) * U), 5), Series((0, 1, 1), 5))
        polys = moment_polys(family, 4)
        assert polys[0] == 1
        assert polys[1] == -Fraction(1, 2) * U
