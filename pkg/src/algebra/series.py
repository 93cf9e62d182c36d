"""Truncated formal power series over the exact coefficient ring.

A ``Series`` stores exactly ``order + 1`` coefficients. Binary operations on
series of different orders truncate to the smaller order; nothing ever extends
an order silently.
"""
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from ..utils.exceptions import (
    BadConstantTerm,
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotRevertible,
    TruncationExceeded,
)
from ..utils.logger import algebra_logger
from .coeffring import (
    Coefficient,
    Poly,
    exact_div,
    is_unit,
    is_zero,
    render,
    specialize,
    to_coefficient,
    unit_inverse,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class Series:
    """Immutable truncated power series ``c0 + c1 x + ... + cN x^N``."""

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs: Iterable = (), order: Optional[int] = None):
        values = [to_coefficient(c) for c in coeffs]
        if order is None:
            order = max(len(values) - 1, 0)
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        values = values[: order + 1]
        values.extend([ZERO] * (order + 1 - len(values)))
        object.__setattr__(self, "_coeffs", tuple(values))
        object.__setattr__(self, "_order", order)

    def __setattr__(self, key, value):
        raise AttributeError("Series is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((ONE,), order)

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls((value,), order)

    @classmethod
    def variable(cls, order: int) -> "Series":
        return cls((ZERO, ONE), order)

    @classmethod
    def monomial(cls, value, power: int, order: int) -> "Series":
        return cls([ZERO] * power + [value], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int) -> "Series":
        return cls(coeffs, order)

    # -- access -------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[Coefficient, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Coefficient:
        if n < 0:
            raise ValueError("coefficient index must be non-negative")
        if n > self._order:
            raise TruncationExceeded(f"[x^{n}] requested from a series of order {self._order}")
        return self._coeffs[n]

    __getitem__ = coeff

    def valuation(self) -> Optional[int]:
        for n, c in enumerate(self._coeffs):
            if not is_zero(c):
                return n
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def has_poly_coefficients(self) -> bool:
        return any(isinstance(c, Poly) and not c.is_constant() for c in self._coeffs)

    # -- shape --------------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        if order > self._order:
            raise TruncationExceeded(f"cannot extend order {self._order} to {order}")
        return Series(self._coeffs, order)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k; the k lowest coefficients must be exactly zero."""
        for n in range(min(k, self._order + 1)):
            if not is_zero(self._coeffs[n]):
                raise NonUnitConstantTerm(
                    f"cannot divide by x^{k}: coefficient of x^{n} is {render(self._coeffs[n])}"
                )
        if k > self._order:
            raise TruncationExceeded(f"shift by {k} exceeds order {self._order}")
        return Series(self._coeffs[k:], self._order - k)

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by x^k, keeping the order."""
        return Series([ZERO] * k + list(self._coeffs), self._order)

    def scale_argument(self, factor) -> "Series":
        """A(factor * x)."""
        factor = to_coefficient(factor)
        out, power = [], ONE
        for c in self._coeffs:
            out.append(c * power)
            power = power * factor
        return Series(out, self._order)

    def derivative(self) -> "Series":
        if self._order == 0:
            return Series.zero(0)
        return Series([n * self._coeffs[n] for n in range(1, self._order + 1)], self._order - 1)

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient]) -> "Series":
        return Series((fn(c) for c in self._coeffs), self._order)

    def specialize(self, value) -> "Series":
        """Substitute ``u = value`` in every coefficient."""
        return self.map_coefficients(lambda c: specialize(c, value))

    def scale(self, factor) -> "Series":
        factor = to_coefficient(factor)
        return self.map_coefficients(lambda c: c * factor)

    def exact_scale_div(self, divisor) -> "Series":
        """Divide every coefficient exactly by ``divisor`` (possibly a non-unit polynomial)."""
        divisor = to_coefficient(divisor)
        return self.map_coefficients(lambda c: exact_div(c, divisor))

    # -- ring operations ----------------------------------------------------

    def _align(self, other) -> Tuple["Series", "Series"]:
        if not isinstance(other, Series):
            other = Series.constant(to_coefficient(other), self._order)
        order = min(self._order, other._order)
        a = self if self._order == order else self.truncate(order)
        b = other if other._order == order else other.truncate(order)
        return a, b

    def __add__(self, other):
        if not isinstance(other, (Series, int, Fraction, Poly)):
            return NotImplemented
        a, b = self._align(other)
        return Series((x + y for x, y in zip(a._coeffs, b._coeffs)), a._order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, (Series, int, Fraction, Poly)):
            return NotImplemented
        a, b = self._align(other)
        return Series((x - y for x, y in zip(a._coeffs, b._coeffs)), a._order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self._align(other)
        n = a._order
        ac, bc = a._coeffs, b._coeffs
        out: List[Coefficient] = [ZERO] * (n + 1)
        for i in range(n + 1):
            ai = ac[i]
            if is_zero(ai):
                continue
            for j in range(n + 1 - i):
                bj = bc[j]
                if not is_zero(bj):
                    out[i + j] = out[i + j] + ai * bj
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        return Series.one(self._order) / self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(unit_inverse(to_coefficient(other)))
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self._align(other)
        if not is_unit(b._coeffs[0]):
            raise NonUnitConstantTerm(
                f"divisor has constant term {render(b._coeffs[0])}, which is not a unit"
            )
        inv = unit_inverse(b._coeffs[0])
        n = a._order
        q: List[Coefficient] = []
        for m in range(n + 1):
            total = a._coeffs[m]
            for k in range(1, m + 1):
                bk = b._coeffs[k]
                if not is_zero(bk):
                    total = total - bk * q[m - k]
            q.append(total * inv)
        return Series(q, n)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        return Series.constant(other, self._order) / self

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int):
            raise ValueError("series exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Series.one(self._order), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- composition, reversion, roots -------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """A(B(x)) by Horner's rule; B(0) must be zero."""
        if not is_zero(inner.coeff(0)):
            raise NonzeroConstantInner(
                f"inner series has constant term {render(inner.coeff(0))}"
            )
        order = min(self._order, inner._order)
        outer = self.truncate(order) if self._order != order else self
        inner = inner.truncate(order) if inner._order != order else inner
        result = Series.constant(outer._coeffs[order], order)
        for n in range(order - 1, -1, -1):
            result = result * inner + outer._coeffs[n]
        return result

    __call__ = compose

    def revert(self) -> "Series":
        """Compositional inverse by exact Newton iteration.

        Starting from x / f'(0), each step g <- g - (f(g) - x) / f'(g) doubles
        the number of correct coefficients; the loop stops once f(g) = x holds
        exactly to the truncation order.
        """
        order = self._order
        if order < 1 or not is_zero(self._coeffs[0]) or not is_unit(self._coeffs[1]):
            raise NotRevertible("reversion needs f(0) = 0 and a unit f'(0)")
        x = Series.variable(order)
        g = x.scale(unit_inverse(self._coeffs[1]))
        # f(g) - x vanishes to order 2, so the unknown top coefficient of f'
        # never reaches the correction.
        fprime = Series(self.derivative()._coeffs, order)
        for iteration in range(order.bit_length() + 2):
            residual = self.compose(g) - x
            if residual.is_zero():
                algebra_logger.debug(f"reversion converged after {iteration} Newton steps (order {order})")
                return g
            g = g - residual / fprime.compose(g)
        if not (self.compose(g) - x).is_zero():
            raise NotRevertible("Newton iteration failed to converge")
        return g

    def sqrt1(self) -> "Series":
        """Square root of a series with constant term exactly 1."""
        if self._coeffs[0] != 1:
            raise BadConstantTerm(f"sqrt1 needs constant term 1, got {render(self._coeffs[0])}")
        s: List[Coefficient] = [ONE]
        half = Fraction(1, 2)
        for n in range(1, self._order + 1):
            total = self._coeffs[n]
            for k in range(1, n):
                total = total - s[k] * s[n - k]
            s.append(total * half)
        return Series(s, self._order)

    # -- comparison and rendering ------------------------------------------

    def agrees_with(self, other: "Series", order: Optional[int] = None) -> bool:
        """Coefficient equality up to ``order`` (default: the common order)."""
        limit = min(self._order, other._order) if order is None else order
        if limit > min(self._order, other._order):
            raise TruncationExceeded(f"cannot compare to order {limit}")
        return all(self._coeffs[n] == other._coeffs[n] for n in range(limit + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"Series([{self.render()}], order={self._order})"

    def render(self, variable: str = "u") -> str:
        return ", ".join(render(c, variable) for c in self._coeffs)

    def to_json(self, variable: str = "u") -> List[str]:
        return [render(c, variable) for c in self._coeffs]


SeriesOrScalar = Union[Series, int, Fraction, Poly]


def series_arith(op: str, a: Series, b: Series) -> Series:
    """``add``, ``sub``, ``mul`` or ``div`` on two series."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation: {op}")


def compose(a: Series, b: Series) -> Series:
    return a.compose(b)


def revert(f: Series) -> Series:
    return f.revert()


def sqrt1(a: Series) -> Series:
    return a.sqrt1()


def coeff(a: Series, n: int) -> Coefficient:
    return a.coeff(n)


def solve_gk(k: int, order: int) -> Series:
    """The series g with g(0) = 1 and g = 1 + x g^k, as 1 + Rev(x / (1 + x)^k)."""
    if k < 1:
        raise ValueError("solve_gk needs k >= 1")
    x = Series.variable(order)
    return Series.one(order) + (x / (1 + x) ** k).revert()
