"""Riordan pairs, their matrices, the group law and moment extraction.

A pair (g, f) acts on a series h by (g, f) . h = g * h(f) and multiplies by
(g, f) * (u, v) = (g * u(f), v(f)); its matrix has entries [x^n] g f^k.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..utils.exceptions import (
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotRevertible,
    RouteMismatch,
    TruncationExceeded,
    UnsupportedCoefficient,
)
from ..utils.logger import algebra_logger
from .coeffring import Coefficient, is_unit, is_zero, render, unit_inverse
from .matrices import (
    LowerTriMatrix,
    ProductionMatrix,
    Witness,
    coefficient_array,
    matmul,
    matrix_inverse,
)
from .series import Series


def _times_x(s: Series) -> Series:
    """x * s, gaining one order of precision."""
    return Series((0,) + s.coeffs, s.order + 1)


@dataclass(frozen=True)
class RiordanPair:
    """An element (g, f) of the Riordan group, truncated at a common order."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.order != self.f.order:
            raise ValueError(f"g has order {self.g.order} but f has order {self.f.order}")
        if not is_unit(self.g.coeff(0)):
            raise NonUnitConstantTerm(f"g(0) = {render(self.g.coeff(0))} is not a unit")
        if not is_zero(self.f.coeff(0)):
            raise NonzeroConstantInner(f"f(0) = {render(self.f.coeff(0))} must be 0")
        if self.f.order < 1 or not is_unit(self.f.coeff(1)):
            raise NotRevertible("f'(0) must be a unit")

    @classmethod
    def of(cls, g: Series, f: Series) -> "RiordanPair":
        """Build a pair, truncating both components to their common order."""
        order = min(g.order, f.order)
        return cls(g.truncate(order), f.truncate(order))

    @classmethod
    def identity(cls, order: int) -> "RiordanPair":
        return cls(Series.one(order), Series.variable(order))

    @property
    def order(self) -> int:
        return self.g.order

    def truncate(self, order: int) -> "RiordanPair":
        return RiordanPair(self.g.truncate(order), self.f.truncate(order))

    def column(self, k: int) -> Series:
        return self.g * self.f ** k

    def entry(self, n: int, k: int) -> Coefficient:
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        if n > self.order:
            raise TruncationExceeded(f"entry ({n},{k}) needs order {n}, pair has order {self.order}")
        return self.column(k).coeff(n)

    def to_matrix(self, n: int) -> LowerTriMatrix:
        if n > self.order + 1:
            raise TruncationExceeded(f"a {n}x{n} matrix needs order {n - 1}, pair has order {self.order}")
        rows: List[List[Coefficient]] = [[] for _ in range(n)]
        column = self.g
        for k in range(n):
            for i in range(k, n):
                rows[i].append(column.coeff(i))
            column = column * self.f
        return LowerTriMatrix(tuple(tuple(r) for r in rows))

    def __mul__(self, other: "RiordanPair") -> "RiordanPair":
        return RiordanPair.of(self.g * other.g.compose(self.f), other.f.compose(self.f))

    def inverse(self) -> "RiordanPair":
        fbar = self.f.revert()
        return RiordanPair(self.g.compose(fbar).inverse(), fbar)

    def act(self, h: Series) -> Series:
        return self.g * h.compose(self.f)

    def __pow__(self, exponent: int) -> "RiordanPair":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = RiordanPair.identity(self.order), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    power = __pow__

    def with_g_power(self, m: int) -> "RiordanPair":
        """(g^m, f); m may be negative."""
        return RiordanPair(self.g ** m, self.f)

    def is_poly_free_f(self) -> bool:
        return not self.f.has_poly_coefficients()

    def __repr__(self) -> str:
        return f"RiordanPair(g=[{self.g.render()}], f=[{self.f.render()}])"


def entry(r: RiordanPair, n: int, k: int) -> Coefficient:
    return r.entry(n, k)


def to_matrix(r: RiordanPair, n: int) -> LowerTriMatrix:
    return r.to_matrix(n)


def rmul(r1: RiordanPair, r2: RiordanPair) -> RiordanPair:
    return r1 * r2


def rinv(r: RiordanPair) -> RiordanPair:
    return r.inverse()


def apply(r: RiordanPair, h: Series) -> Series:
    """The fundamental-theorem action g * h(f)."""
    return r.act(h)


@dataclass(frozen=True)
class InvolutionResult:
    holds: bool
    n: int
    witness: Optional[Witness] = None


def involution_check(r: RiordanPair, n: int) -> InvolutionResult:
    """Decide R^2 = (1, x) through both the group law and the n x n matrix square.

    The witness is the first (row, col, got, expected) where the matrix square
    departs from the identity.
    """
    if n > r.order + 1:
        raise TruncationExceeded(f"an {n}x{n} check needs order {n - 1}, pair has order {r.order}")
    r = r.truncate(max(n - 1, 1))
    square = r * r
    identity = RiordanPair.identity(square.order)
    pair_holds = square.g.agrees_with(identity.g, n - 1) and square.f.agrees_with(identity.f, n - 1)
    m = r.to_matrix(n)
    witness = (m @ m).identity_witness()
    matrix_holds = witness is None
    if pair_holds != matrix_holds:
        raise RouteMismatch(
            f"group-law square says {pair_holds}, matrix square says {matrix_holds}", witness
        )
    algebra_logger.debug(f"involution check n={n}: {'holds' if matrix_holds else f'fails at {witness[:2]}'}")
    return InvolutionResult(holds=matrix_holds, n=n, witness=witness)


def az_sequences(r: RiordanPair) -> Tuple[Series, Series]:
    """A = x / fbar and Z = (1 - g(0) / g(fbar)) / fbar, both to order N - 1."""
    fbar = r.f.revert()
    fbar_over_x = fbar.shift_down(1)
    a_seq = fbar_over_x.inverse()
    numerator = Series.one(r.order) - r.g.coeff(0) * r.g.compose(fbar).inverse()
    z_seq = numerator.shift_down(1) / fbar_over_x
    return a_seq, z_seq


def pair_from_az(a_seq: Series, z_seq: Series, g0=1) -> RiordanPair:
    """Rebuild (g, f) from its A- and Z-sequences: f = x A(f), g = g0 / (1 - x Z(f))."""
    order = min(a_seq.order, z_seq.order) + 1
    a_seq, z_seq = a_seq.truncate(order - 1), z_seq.truncate(order - 1)
    f = _times_x(a_seq.inverse()).revert()
    g = Series.constant(g0, order) / (Series.one(order) - _times_x(z_seq.compose(f.truncate(order - 1))))
    return RiordanPair.of(g, f)


def inverse_from_az(r: RiordanPair) -> RiordanPair:
    """R^-1 = ((1 - x Z / A) / g(0), x / A)."""
    a_seq, z_seq = az_sequences(r)
    g = (Series.one(r.order) - _times_x(z_seq / a_seq)) * unit_inverse(r.g.coeff(0))
    return RiordanPair.of(g, _times_x(a_seq.inverse()))


def production_matrix_from_az(a_seq: Series, z_seq: Series, n: int) -> ProductionMatrix:
    """P[i][0] = Z_i and P[i][j] = A_{i-j+1} for j >= 1."""
    if n > min(a_seq.order, z_seq.order) + 1:
        raise TruncationExceeded(f"an {n}x{n} production matrix needs A and Z to order {n - 1}")
    zero = Series.zero(0).coeff(0)
    rows = []
    for i in range(n):
        row = [z_seq.coeff(i)]
        for j in range(1, n):
            k = i - j + 1
            row.append(a_seq.coeff(k) if k >= 0 else zero)
        rows.append(row)
    return ProductionMatrix.from_rows(rows)


def production_matrix_by_matrices(r: RiordanPair, n: int) -> ProductionMatrix:
    """M^-1 * Mbar, where Mbar is M with its first row removed."""
    big = r.to_matrix(n + 1).dense()
    m_inv = matrix_inverse(r.to_matrix(n)).dense()
    m_bar = [row[:n] for row in big[1:]]
    return ProductionMatrix.from_rows(matmul(m_inv, m_bar))


def production_matrix(r: RiordanPair, n: int) -> ProductionMatrix:
    """Production matrix from the A/Z series, cross-checked against M^-1 * Mbar."""
    if n > r.order:
        raise TruncationExceeded(f"an {n}x{n} production matrix needs order {n}, pair has order {r.order}")
    a_seq, z_seq = az_sequences(r)
    series_route = production_matrix_from_az(a_seq, z_seq, n)
    matrix_route = production_matrix_by_matrices(r, n)
    witness = series_route.difference(matrix_route)
    if witness is not None:
        raise RouteMismatch(f"production matrix routes differ at {witness[:2]}", witness)
    return series_route


def _require_parameter_free_f(family: RiordanPair) -> None:
    if not family.is_poly_free_f():
        raise UnsupportedCoefficient("moment extraction needs f free of the parameter")


def moment_polys(family: RiordanPair, n: int) -> List[Coefficient]:
    """First column of the inverse of a parameterized family: mu_0(u), ..., mu_{n-1}(u)."""
    _require_parameter_free_f(family)
    if n > family.order + 1:
        raise TruncationExceeded(f"{n} moments need order {n - 1}, family has order {family.order}")
    first_column = family.inverse().g
    return [first_column.coeff(k) for k in range(n)]


def moment_coefficient_array(family: RiordanPair, n: int) -> LowerTriMatrix:
    """Row r lists the coefficients of u^k in mu_r(u)."""
    return coefficient_array(moment_polys(family, n), n)


def moment_array_pair(h: Series, d: Series, f: Series, base: Optional[Series] = None) -> RiordanPair:
    """Moment coefficient array of the family ((base + u h) / d, f) as a Riordan pair.

    The moment generating function (d / base)(fbar) / (1 + u (h / base)(fbar))
    expands in powers of u as the columns of ((d / base)(fbar), -(h / base)(fbar)).
    ``base`` defaults to 1; coefficients of h and d may carry their own parameter.
    """
    if not is_zero(h.coeff(0)):
        raise NonzeroConstantInner("h must vanish at 0")
    if base is not None:
        d, h = d / base, h / base
    fbar = f.revert()
    return RiordanPair.of(d.compose(fbar), -h.compose(fbar))
