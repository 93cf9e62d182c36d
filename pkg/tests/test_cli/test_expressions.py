"""
Tests for the series, pair and sequence expression parser.
"""
from fractions import Fraction

import pytest

from src.algebra.coeffring import U
from src.algebra.families import catalan, general_involution, pascal
from src.cli.expressions import describe, parse_pair, parse_pair_or_family, parse_sequence, parse_series, tokenize
from src.utils.exceptions import ExpressionError
from src.verification import golden
from tests.utils.assertions import assert_coeffs


class TestSeriesExpressions:
    """Test series parsing and evaluation."""

    def test_geometric(self):
        assert_coeffs(parse_series("1/(1-x)", 5), [1] * 6)

    def test_catalan_closed_form(self):
        assert parse_series("(1 - sqrt1(1 - 4*x)) / (2*x)", 8) == catalan(8)

    def test_named_series_and_composition(self):
        assert parse_series("c", 6) == catalan(6)
        assert_coeffs(parse_series("c(x^2)", 6), [1, 0, 1, 0, 2, 0, 5])
        assert_coeffs(parse_series("t", 4), [1, 1, 3, 12, 55])

    def test_precedence(self):
        assert_coeffs(parse_series("1 + 2*x^2 - -x", 3), [1, 1, 2, 0])
        assert_coeffs(parse_series("(1+x)^-1", 3), [1, -1, 1, -1])

    def test_parameter(self):
        series = parse_series("(1 + u*x)/(1+x)", 2)
        assert series.coeff(1) == U - 1
        assert parse_series("y", 1).coeff(0) == U

    @pytest.mark.parametrize(
        "text",
        ["1 +", "1/x", "x^-1", "z", "1 $ 2", "sqrt1(4 + x)", "(1 + x", "x^y", "1/0"],
    )
    def test_errors(self, text):
        with pytest.raises(ExpressionError):
            parse_series(text, 4)

    def test_tokenize(self):
        kinds = [t.kind for t in tokenize("c(x^2) + 12")]
        assert kinds == ["name", "op", "name", "op", "int", "op", "op", "int", "eof"]


class TestPairExpressions:
    """Test pair parsing."""

    def test_pascal(self):
        assert parse_pair("(1/(1-x), x/(1-x))", 5) == pascal(5)

    def test_not_a_pair(self):
        with pytest.raises(ExpressionError):
            parse_pair("(x, x)", 3)
        with pytest.raises(ExpressionError):
            parse_pair("(1, 1 + x)", 3)

    def test_malformed(self):
        for text in ("(1, x", "1, x)", "(1 x)", "(1, x) x"):
            with pytest.raises(ExpressionError):
                parse_pair(text, 3)

    def test_family_names(self):
        assert parse_pair_or_family("general:3,2", 6) == general_involution(3, 2, 6)
        assert parse_pair_or_family(" (1, x)", 3).f.coeffs == (0, 1, 0, 0)

    def test_describe(self):
        assert describe("general: 3, 2") == "general:3,2"
        assert describe("(1, x)") is None


class TestSequenceExpressions:
    """Test sequence expressions."""

    def test_diagonal_sums(self):
        assert parse_sequence("diagsums (c, x*c^3)", 10) == golden.A081696_PREFIX

    def test_row_sums_of_family(self):
        assert parse_sequence("rowsums general:3,2", 9) == golden.GENERAL_3_2_ROW_SUMS
        assert parse_sequence("absrowsums general:3,2", 9) == golden.GENERAL_3_2_ABS_ROW_SUMS

    def test_column(self):
        assert parse_sequence("column 1 (1/(1-x), x/(1-x))", 5) == [1, 2, 3, 4, 5]

    def test_generating_function(self):
        assert parse_sequence("gf c", 6) == [1, 1, 2, 5, 14, 42]

    def test_literals(self):
        assert parse_sequence("1, 1/2, -3", 3) == [1, Fraction(1, 2), -3]
        assert parse_sequence("[1, 2]", 2) == [1, 2]

    @pytest.mark.parametrize("text", ["", "column x (1, x)", "1, a", "rowsums bogus"])
    def test_errors(self, text):
        with pytest.raises(ExpressionError):
            parse_sequence(text, 4)
