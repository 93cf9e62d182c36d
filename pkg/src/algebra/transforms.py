"""Sequence and matrix transforms: Hankel, binomial, INVERT, row and diagonal sums."""
from math import comb
from typing import Dict, List, Sequence, Tuple

from ..utils.exceptions import NotEnoughTerms, RouteMismatch, UnsupportedCoefficient
from ..utils.logger import algebra_logger
from .coeffring import Coefficient, Poly, exact_div, is_zero, render, to_coefficient
from .matrices import LowerTriMatrix
from .series import Series

Seq = List[Coefficient]

ZERO = to_coefficient(0)
ONE = to_coefficient(1)

# Sizes up to which the Hankel transform is re-derived by cofactor expansion.
CROSS_CHECK_SIZE = 4


def to_seq(values: Sequence) -> Seq:
    return [to_coefficient(v) for v in values]


def hankel_matrix(a: Sequence[Coefficient], n: int) -> List[List[Coefficient]]:
    """The (n+1) x (n+1) matrix (a_{i+j})."""
    return [[a[i + j] for j in range(n + 1)] for i in range(n + 1)]


def cofactor_determinant(matrix: Sequence[Sequence[Coefficient]]) -> Coefficient:
    """Laplace expansion along successive rows, memoized on the remaining columns."""
    n = len(matrix)
    memo: Dict[Tuple[int, ...], Coefficient] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> Coefficient:
        if row == n:
            return ONE
        if cols in memo:
            return memo[cols]
        total = ZERO
        for position, col in enumerate(cols):
            entry = matrix[row][col]
            if is_zero(entry):
                continue
            term = entry * minor(row + 1, cols[:position] + cols[position + 1:])
            total = total - term if position % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def leading_minors(matrix: Sequence[Sequence[Coefficient]]) -> List[Coefficient]:
    """Determinants of the leading k x k blocks, k = 1..n, by fraction-free elimination.

    After step k the Bareiss pivot equals the (k+1)-th leading minor. Pivoting is
    positional; once a pivot vanishes the remaining minors come from cofactor
    expansion.
    """
    n = len(matrix)
    work = [list(row) for row in matrix]
    minors: List[Coefficient] = []
    previous = ONE
    for k in range(n):
        pivot = work[k][k]
        minors.append(pivot)
        if is_zero(pivot):
            if k + 1 < n:
                algebra_logger.debug(f"zero pivot at step {k}; using cofactor expansion for larger minors")
            for size in range(k + 2, n + 1):
                minors.append(cofactor_determinant([row[:size] for row in matrix[:size]]))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = exact_div(work[i][j] * pivot - work[i][k] * work[k][j], previous)
        previous = pivot
    return minors


def determinant(matrix: Sequence[Sequence[Coefficient]]) -> Coefficient:
    if not matrix:
        return ONE
    return leading_minors(matrix)[-1]


def hankel(a: Sequence, n_max: int) -> Seq:
    """h_n = det(a_{i+j})_{0..n} for n = 0..n_max."""
    a = to_seq(a)
    if len(a) < 2 * n_max + 1:
        raise NotEnoughTerms(f"hankel up to n={n_max} needs {2 * n_max + 1} terms, got {len(a)}")
    matrix = hankel_matrix(a, n_max)
    minors = leading_minors(matrix)
    for n in range(min(n_max + 1, CROSS_CHECK_SIZE)):
        oracle = cofactor_determinant([row[: n + 1] for row in matrix[: n + 1]])
        if oracle != minors[n]:
            raise RouteMismatch(
                f"h_{n}: elimination gives {render(minors[n])}, cofactor expansion gives {render(oracle)}",
                (n, minors[n], oracle),
            )
    return minors


def binomial_transform(a: Sequence) -> Seq:
    """b_n = sum_k C(n, k) a_k."""
    a = to_seq(a)
    return [sum((comb(n, k) * a[k] for k in range(n + 1)), ZERO) for n in range(len(a))]


def invert_transform(a: Sequence) -> Seq:
    """Coefficients of a(x) / (1 - x a(x))."""
    a = to_seq(a)
    if not a:
        return []
    series = Series(a, len(a) - 1)
    x = Series.variable(series.order)
    return list((series / (1 - x * series)).coeffs)


def _absolute(value: Coefficient) -> Coefficient:
    if isinstance(value, Poly):
        if not value.is_constant():
            raise UnsupportedCoefficient("absolute row sums need rational entries")
        value = value.constant_value()
    return abs(value)


def matrix_sums(m: LowerTriMatrix, mode: str = "row") -> Seq:
    """Row sums, absolute row sums or diagonal sums sum_k M[n-k][k]."""
    if mode == "row":
        return [sum(row, ZERO) for row in m.rows]
    if mode == "abs_row":
        return [sum((_absolute(c) for c in row), ZERO) for row in m.rows]
    if mode == "diagonal":
        return [sum((m.rows[n - k][k] for k in range(n // 2 + 1)), ZERO) for n in range(m.n)]
    raise ValueError(f"unknown sum mode: {mode}")


def reverse_rows(m: LowerTriMatrix) -> LowerTriMatrix:
    return LowerTriMatrix(tuple(tuple(reversed(row)) for row in m.rows))


def row_polynomial_values(m: LowerTriMatrix, x) -> Seq:
    """sum_k M[n][k] x^k for every row n."""
    x = to_coefficient(x)
    out = []
    for row in m.rows:
        total = ZERO
        for c in reversed(row):
            total = total * x + c
        out.append(total)
    return out
