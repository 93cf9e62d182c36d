"""
Tests for sequence and matrix transforms.

This module tests:
- Hankel transforms over Q and Q[u], including the cofactor fallback
- Binomial and INVERT transforms
- Row, absolute-row and diagonal sums
"""
from unittest.mock import patch

import pytest

from src.algebra.coeffring import U
from src.algebra.families import general_involution, pascal, signed_pascal, ternary
from src.algebra.matrices import LowerTriMatrix
from src.algebra.transforms import (
    binomial_transform,
    cofactor_determinant,
    determinant,
    hankel,
    invert_transform,
    leading_minors,
    matrix_sums,
    reverse_rows,
    row_polynomial_values,
)
from src.utils.exceptions import NotEnoughTerms, UnsupportedCoefficient
from src.verification import golden
from tests.utils.assertions import assert_rows
from tests.utils.factories import random_matrix, random_poly_matrix

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]


@pytest.mark.unit
class TestHankel:
    """Test Hankel transforms."""

    def test_catalan_is_all_ones(self):
        assert hankel(CATALAN, 5) == [1] * 6
        assert hankel(CATALAN[1:], 5) == [1] * 6

    def test_motzkin_is_all_ones(self):
        assert hankel(MOTZKIN, 5) == [1] * 6

    def test_ternary_moments(self):
        assert hankel(golden.TERNARY_MOMENTS_AT_ONE, 4) == [1, 1, 3, 26, 646]

    def test_ternary_numbers(self):
        assert hankel(ternary(10).coeffs, 4) == golden.TERNARY_HANKEL

    def test_binomial_invariance(self):
        assert hankel(binomial_transform(CATALAN), 5) == hankel(CATALAN, 5)

    def test_polynomial_moments(self):
        moments = golden.APPENDIX_MOMENT_POLYS[:5]
        assert hankel(moments, 2) == [1, 1 - U, (1 - U) ** 2]

    def test_not_enough_terms(self):
        with pytest.raises(NotEnoughTerms):
            hankel([1, 1, 2], 2)

    def test_zero_pivot_falls_back_to_cofactors(self):
        assert leading_minors([[0, 1], [1, 0]]) == [0, -1]
        assert hankel([0, 1, 0, 1, 0], 2) == [0, -1, 0]

    @patch("src.algebra.transforms.algebra_logger")
    def test_zero_pivot_fallback_logs_at_debug(self, mock_logger):
        leading_minors([[0, 1], [1, 0]])
        mock_logger.debug.assert_called_once()
        mock_logger.warning.assert_not_called()

    def test_elimination_matches_cofactor_expansion(self, rng):
        for n in range(1, 6):
            matrix = random_matrix(rng, n)
            assert determinant(matrix) == cofactor_determinant(matrix)

    def test_elimination_matches_cofactor_expansion_over_polys(self, rng):
        for _ in range(10):
            for n in range(1, 5):
                matrix = random_poly_matrix(rng, n)
                expected = [cofactor_determinant([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]
                assert leading_minors(matrix) == expected


@pytest.mark.unit
class TestSequenceTransforms:
    """Test binomial and INVERT transforms."""

    def test_binomial_transform_of_catalan(self):
        assert binomial_transform(CATALAN[:6]) == [1, 2, 5, 15, 51, 188]

    def test_binomial_transform_of_ones(self):
        assert binomial_transform([1] * 6) == [1, 2, 4, 8, 16, 32]

    def test_invert_of_ones(self):
        assert invert_transform([1, 1, 1, 1]) == [1, 2, 4, 8]

    def test_invert_of_empty(self):
        assert invert_transform([]) == []


@pytest.mark.unit
class TestMatrixSums:
    """Test row and diagonal sums."""

    def test_pascal_sums(self):
        m = pascal(7).to_matrix(8)
        assert matrix_sums(m, "row") == [1, 2, 4, 8, 16, 32, 64, 128]
        assert matrix_sums(m, "diagonal") == [1, 1, 2, 3, 5, 8, 13, 21]

    def test_absolute_row_sums(self):
        m = signed_pascal(5).to_matrix(6)
        assert matrix_sums(m, "row") == [1, 0, 0, 0, 0, 0]
        assert matrix_sums(m, "abs_row") == [1, 2, 4, 8, 16, 32]

    def test_general_involution_sums(self):
        m = general_involution(3, 2, 8).to_matrix(9)
        assert matrix_sums(m, "row") == golden.GENERAL_3_2_ROW_SUMS
        assert matrix_sums(m, "abs_row") == golden.GENERAL_3_2_ABS_ROW_SUMS

    def test_absolute_sums_need_rationals(self):
        with pytest.raises(UnsupportedCoefficient):
            matrix_sums(LowerTriMatrix.from_rows([[1], [U, 1]]), "abs_row")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            matrix_sums(pascal(3).to_matrix(2), "column")

    def test_reverse_rows(self):
        assert_rows(reverse_rows(pascal(3).to_matrix(3)), [[1], [1, 1], [1, 2, 1]])
        assert_rows(reverse_rows(LowerTriMatrix.from_rows(golden.HANKEL_H1_ROWS)), golden.HANKEL_H1_REVERSED_ROWS)

    def test_row_polynomial_values(self):
        m = pascal(4).to_matrix(5)
        assert row_polynomial_values(m, 1) == [1, 2, 4, 8, 16]
        assert row_polynomial_values(m, -1) == [1, 0, 0, 0, 0]
        assert row_polynomial_values(m, 0) == [1] * 5

