"""
Tests for almost-Riordan arrays and the parameterized T-array pipeline.
"""
import pytest

from src.algebra.almost import (
    AlmostRiordan1,
    a035929_series,
    appendix_coefficient_pair,
    appendix_inverse_pair,
    appendix_moment_pipeline,
    ar_to_matrix,
    chebyshev_T_array,
    parameterized_T_array,
    somos_series,
    somos_shifted,
)
from src.algebra.coeffring import U
from src.algebra.matrices import matrix_inverse
from src.algebra.riordan import involution_check
from src.algebra.series import Series
from src.algebra.transforms import row_polynomial_values
from src.utils.exceptions import NonUnitConstantTerm, TruncationExceeded
from src.verification import golden
from tests.utils.assertions import assert_coeffs, assert_rows, assert_same_matrix, assert_series_agree


@pytest.mark.unit
class TestChebyshevT:
    """Test the almost-Riordan array of Chebyshev T polynomials."""

    def test_rows(self):
        array = chebyshev_T_array(6)
        assert_rows(array.to_matrix(7), golden.CHEBYSHEV_T_ROWS)
        assert_rows(array.embedded.to_matrix(6), golden.CHEBYSHEV_T_EMBEDDED_ROWS)

    def test_ar_to_matrix(self):
        array = chebyshev_T_array(5)
        assert ar_to_matrix(array, 4) == array.to_matrix(4)

    def test_values_at_one(self):
        assert row_polynomial_values(chebyshev_T_array(8).to_matrix(9), 1) == [1] * 9

    def test_not_an_involution(self):
        m = chebyshev_T_array(6).to_matrix(7)
        assert not (m @ m).is_identity()

    def test_size_beyond_order(self):
        with pytest.raises(TruncationExceeded):
            chebyshev_T_array(4).to_matrix(7)

    def test_first_column_needs_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            AlmostRiordan1(Series((0, 1), 3), Series.one(3), Series.variable(3))


@pytest.mark.unit
class TestParameterizedT:
    """Test the T-array over Q[u] and its moment pipeline."""

    def test_rows_and_inverse(self):
        m = parameterized_T_array(6).to_matrix(7)
        assert_rows(m, golden.PARAMETERIZED_T_ROWS)
        assert_rows(matrix_inverse(m.truncate(5)), golden.PARAMETERIZED_T_INVERSE_ROWS)

    def test_specializes_to_half_argument_u(self):
        m = parameterized_T_array(6).to_matrix(7).specialize(0)
        assert_rows(m, golden.CHEBYSHEV_U_HALF_ROWS)

    def test_pipeline(self):
        result = appendix_moment_pipeline(7)
        assert result.moments[:6] == golden.APPENDIX_MOMENT_POLYS
        assert_rows(result.coeff_array, golden.APPENDIX_COEFFICIENT_ROWS)
        assert result.jf.alphas == (-U, 0, 0)
        assert result.jf.betas == (1 - U, 1, 1)
        assert result.hankel == [1, 1 - U, (1 - U) ** 2, (1 - U) ** 3]

    def test_pipeline_matches_coefficient_pair(self):
        result = appendix_moment_pipeline(7)
        assert_same_matrix(result.coeff_array, appendix_coefficient_pair(7).to_matrix(8))


@pytest.mark.unit
class TestAppendixSeries:
    """Test the inverse coefficient pair and its named series."""

    def test_coefficient_pair_is_not_involution(self):
        assert not involution_check(appendix_coefficient_pair(7), 5).holds

    def test_inverse_closed_form(self):
        inverse = appendix_coefficient_pair(10).inverse()
        closed = appendix_inverse_pair(10)
        assert_series_agree(inverse.g, closed.g)
        assert_series_agree(inverse.f, closed.f)

    def test_somos_prefix(self):
        assert_coeffs(somos_series(10), golden.SOMOS_PREFIX)

    def test_somos_shifted(self):
        shifted = somos_shifted(10)
        assert_coeffs(shifted, [1] + golden.SOMOS_PREFIX[:10])

    def test_a035929_is_negated_f(self):
        assert_series_agree(-appendix_inverse_pair(10).f, a035929_series(10))
