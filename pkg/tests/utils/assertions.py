"""
Custom assertion helpers for the Riordan toolkit tests.

This module provides assertion functions for exact comparisons of matrices,
series and Riordan pairs, with failure messages that name the first
differing entry.
"""
from typing import Sequence

from src.algebra.coeffring import render, to_coefficient
from src.algebra.matrices import LowerTriMatrix
from src.algebra.riordan import RiordanPair, involution_check
from src.algebra.series import Series
from src.schemas.payloads import witness_text


def assert_rows(matrix: LowerTriMatrix, rows: Sequence[Sequence]):
    """
    Assert that a lower-triangular matrix equals the given rows entry for entry.

    Args:
        matrix: Computed matrix
        rows: Expected rows, ragged or square, with int, Fraction, str or Poly entries

    Raises:
        AssertionError: On the first differing entry
    """
    expected = LowerTriMatrix.from_rows(rows)
    assert matrix.n == expected.n, f"Matrix has size {matrix.n}, expected {expected.n}"
    witness = matrix.difference(expected)
    assert witness is None, f"Matrices differ at {witness_text(witness)}"


def assert_same_matrix(got: LowerTriMatrix, expected: LowerTriMatrix):
    witness = got.difference(expected)
    assert witness is None, f"Matrices differ at {witness_text(witness)}"


def assert_coeffs(series: Series, expected: Sequence):
    """Assert the leading coefficients of a series."""
    expected = [to_coefficient(v) for v in expected]
    got = list(series.coeffs[: len(expected)])
    assert len(got) == len(expected), f"Series has order {series.order}, need {len(expected) - 1}"
    for n, (a, b) in enumerate(zip(got, expected)):
        assert a == b, f"[x^{n}] is {render(a)}, expected {render(b)}"


def assert_series_agree(a: Series, b: Series):
    assert a.agrees_with(b), f"Series differ:\n  {a.render()}\n  {b.render()}"


def assert_involution(pair: RiordanPair, n: int):
    result = involution_check(pair, n)
    assert result.holds, f"Square departs from the identity at {witness_text(result.witness)}"


def assert_not_involution(pair: RiordanPair, n: int):
    result = involution_check(pair, n)
    assert not result.holds, "Pair squares to the identity"
    assert result.witness is not None
