"""Almost-Riordan arrays of the first kind.

The array (a | g, f) has first column a(x) and, from column 1 on, the Riordan
array (g, f) shifted down one row:

    entry(n, 0) = [x^n] a        entry(n, k) = [x^(n-1)] g f^(k-1),  k >= 1
"""
from dataclasses import dataclass, field
from typing import List

from ..utils.exceptions import NonUnitConstantTerm, TruncationExceeded
from ..utils.logger import algebra_logger
from .coeffring import U, Coefficient, is_unit, render, to_coefficient
from .families import catalan
from .jfrac import JFraction, series_to_jfraction
from .matrices import LowerTriMatrix, coefficient_array, matrix_inverse
from .riordan import RiordanPair
from .series import Series
from .transforms import hankel


@dataclass(frozen=True)
class AlmostRiordan1:
    a: Series
    g: Series
    f: Series
    embedded: RiordanPair = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_unit(self.a.coeff(0)):
            raise NonUnitConstantTerm(f"a(0) = {render(self.a.coeff(0))} is not a unit")
        object.__setattr__(self, "embedded", RiordanPair.of(self.g, self.f))

    @property
    def order(self) -> int:
        return min(self.a.order, self.embedded.order + 1)

    def to_matrix(self, n: int) -> LowerTriMatrix:
        if n - 1 > self.order:
            raise TruncationExceeded(f"a {n}x{n} almost-Riordan matrix needs order {n - 1}")
        zero = to_coefficient(0)
        rows: List[List[Coefficient]] = [[self.a.coeff(i)] for i in range(n)]
        if n > 1:
            inner = self.embedded.to_matrix(n - 1)
            for i in range(1, n):
                rows[i].extend(inner.rows[i - 1])
        rows = [row + [zero] * (i + 1 - len(row)) for i, row in enumerate(rows)]
        return LowerTriMatrix.from_rows(rows)


def ar_to_matrix(array: AlmostRiordan1, n: int) -> LowerTriMatrix:
    return array.to_matrix(n)


def chebyshev_T_array(order: int) -> AlmostRiordan1:
    """(1/(1+x^2) | (1-x^2)/(1+x^2)^2, 2x/(1+x^2)): row n holds the coefficients of T_n."""
    one_plus_x2 = Series((1, 0, 1), order)
    return AlmostRiordan1(
        one_plus_x2.inverse(),
        Series((1, 0, -1), order) / one_plus_x2 ** 2,
        Series((0, 2), order) / one_plus_x2,
    )


def parameterized_T_array(order: int) -> AlmostRiordan1:
    """((1+ux+ux^2)/(1+x^2) | (1+ux+ux^2)/(1+x^2)^2, x/(1+x^2)) over Q[u]."""
    one_plus_x2 = Series((1, 0, 1), order)
    numerator = Series((1, U, U), order)
    return AlmostRiordan1(
        numerator / one_plus_x2,
        numerator / one_plus_x2 ** 2,
        Series.variable(order) / one_plus_x2,
    )


@dataclass(frozen=True)
class AppendixResult:
    moments: List[Coefficient]
    coeff_array: LowerTriMatrix
    jf: JFraction
    hankel: List[Coefficient]


def appendix_moment_pipeline(order: int) -> AppendixResult:
    """Invert the parameterized T-array and analyse its first column.

    Produces the moments mu_0..mu_order, their coefficient array, the peeled
    J-fraction (depth order // 2) and the Hankel transform h_0..h_{order // 2}.
    """
    n = order + 1
    inverse = matrix_inverse(parameterized_T_array(order).to_matrix(n))
    moments = [inverse.rows[i][0] for i in range(n)]
    array = coefficient_array(moments, n)
    depth = order // 2
    jf = series_to_jfraction(Series(moments, order), depth)
    transform = hankel(moments, depth)
    algebra_logger.debug(f"appendix pipeline: {n} moments, J-fraction depth {depth}")
    return AppendixResult(moments=moments, coeff_array=array, jf=jf, hankel=transform)


def appendix_jfraction() -> JFraction:
    """1 / (1 + u x - (1 - u) x^2 / (1 - x^2 / (1 - ...)))."""
    return JFraction.periodic(1, [-U], [1 - U], 0, 1)


def appendix_coefficient_pair(order: int) -> RiordanPair:
    """(c(x^2), 1 - (1 + x) c(x^2))."""
    c_x2 = catalan(order).compose(Series.monomial(1, 2, order))
    return RiordanPair(c_x2, 1 - Series((1, 1), order) * c_x2)


def _appendix_denominator(order: int) -> Series:
    """2 (x^2 - 2x + 2)."""
    return Series((4, -4, 2), order)


def somos_series(order: int) -> Series:
    """(sqrt(1 - 4x) - 2x + 3) / (2 (x^2 - 2x + 2))."""
    radical = Series((1, -4), order).sqrt1()
    return (radical + Series((3, -2), order)) / _appendix_denominator(order)


def somos_shifted(order: int) -> Series:
    """1 + x * somos_series: the once-shifted partner sequence."""
    return Series((1,) + somos_series(order - 1).coeffs, order)


def appendix_inverse_pair(order: int) -> RiordanPair:
    """The closed-form inverse of ``appendix_coefficient_pair``."""
    radical = Series((1, -4), order).sqrt1()
    numerator = radical * Series((-1, 1), order) + Series((1, 1), order)
    return RiordanPair(somos_series(order), -numerator / _appendix_denominator(order))


def a035929_series(order: int) -> Series:
    """x / (1 - (1 - x) x c(x))."""
    x = Series.variable(order)
    return x / (1 - (1 - x) * x * catalan(order))