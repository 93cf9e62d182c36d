"""Exact coefficient arithmetic.

Two coefficient types flow through the whole package:

* ``Fraction`` (``Rational``): arbitrary-precision rationals, always reduced.
* ``Poly``: univariate polynomials in a parameter ``u`` over QQ, backed by
  sympy's sparse polynomial ring. ``u`` plays the role of the family
  parameter (``y`` in the moment families, ``s`` in the necessity probe).

Higher modules never test for the concrete type directly; they go through the
helpers at the bottom of this module (``is_zero``, ``is_unit``,
``unit_inverse``, ``exact_div``, ``render``).
"""
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from ..utils.exceptions import DivisionByZero, InexactDivision, UnsupportedCoefficient

Rational = Fraction
Scalar = Union[int, Fraction]

QQ_U, _GEN_U = ring("u", QQ)


def _to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise UnsupportedCoefficient(f"not an exact scalar: {value!r}")


def _to_qq(value: Scalar):
    value = _to_fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Poly:
    """Immutable polynomial ``c0 + c1*u + c2*u^2 + ...`` over the rationals.

    Arithmetic is delegated to an element of ``QQ_U``; ``coeffs`` is the dense
    ``Fraction`` view (no trailing zeros; the zero polynomial is the empty
    tuple and has degree -1).
    """

    __slots__ = ("_elem", "_coeffs")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [_to_fraction(c) for c in coeffs]
        terms = {(k,): _to_qq(c) for k, c in enumerate(values) if c != 0}
        self._set(QQ_U.from_dict(terms) if terms else QQ_U.zero)

    def _set(self, elem: PolyElement) -> None:
        degree = max((monom[0] for monom in elem.keys()), default=-1)
        dense = [Fraction(0)] * (degree + 1)
        for (k,), c in elem.items():
            dense[k] = _from_qq(c)
        object.__setattr__(self, "_elem", elem)
        object.__setattr__(self, "_coeffs", tuple(dense))

    @classmethod
    def _wrap(cls, elem: PolyElement) -> "Poly":
        poly = object.__new__(cls)
        poly._set(elem)
        return poly

    def __setattr__(self, key, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def variable(cls) -> "Poly":
        return cls._wrap(_GEN_U)

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @property
    def element(self) -> PolyElement:
        return self._elem

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        return self.coefficient(0)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._elem + other._elem)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap(-self._elem)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._elem - other._elem)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(other._elem - self._elem)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._elem * other._elem)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Poly exponent must be a non-negative integer")
        return Poly._wrap(self._elem ** exponent)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division of a polynomial by zero")
            return Poly._wrap(self._elem.quo_ground(_to_qq(other)))
        if isinstance(other, Poly):
            return self.exact_div(other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.exact_div(self)

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """Polynomial long division over the rationals."""
        if not divisor._coeffs:
            raise DivisionByZero("polynomial division by zero")
        quotient, remainder = self._elem.div(divisor._elem)
        return Poly._wrap(quotient), Poly._wrap(remainder)

    def exact_div(self, divisor: "Poly") -> "Poly":
        divisor = self._coerce(divisor)
        quotient, remainder = self.divmod(divisor)
        if remainder._coeffs:
            raise InexactDivision(f"({self}) is not divisible by ({divisor})")
        return quotient

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, _to_fraction(x))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self.constant_value())
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


Coefficient = Union[Fraction, Poly]

U = Poly.variable()


def to_coefficient(value) -> Coefficient:
    """Coerce ints, Fractions, Polys and rational strings to a coefficient."""
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return _to_fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise UnsupportedCoefficient(f"cannot use {value!r} as a coefficient")


def is_zero(value: Coefficient) -> bool:
    return value == 0


def is_unit(value: Coefficient) -> bool:
    """Units of Q are the nonzero rationals; units of Q[u] are nonzero constants."""
    if isinstance(value, Poly):
        return value.degree == 0
    return value != 0


def unit_inverse(value: Coefficient) -> Coefficient:
    if isinstance(value, Poly):
        if value.degree != 0:
            raise UnsupportedCoefficient(f"{value} is not a unit of Q[u]")
        return Poly((1 / value.constant_value(),))
    if value == 0:
        raise DivisionByZero("zero has no inverse")
    return 1 / _to_fraction(value)


def exact_div(a: Coefficient, b: Coefficient) -> Coefficient:
    """Exact quotient a / b in the coefficient ring."""
    if isinstance(a, Poly) or isinstance(b, Poly):
        a_poly, b_poly = Poly._coerce(a), Poly._coerce(b)
        return a_poly.exact_div(b_poly)
    if b == 0:
        raise DivisionByZero("division by zero")
    return _to_fraction(a) / _to_fraction(b)


def specialize(value: Coefficient, x: Scalar) -> Fraction:
    """Evaluate a parameterized coefficient at ``u = x``; rationals pass through."""
    if isinstance(value, Poly):
        return poly_eval(value, _to_fraction(x))
    return _to_fraction(value)


def sign(value: Coefficient) -> int:
    if isinstance(value, Poly):
        raise UnsupportedCoefficient("polynomial coefficients have no sign")
    return (value > 0) - (value < 0)


def poly_arith(op: str, p: Poly, q: Poly) -> Poly:
    """Ring operation on two polynomials: ``add``, ``sub``, ``mul`` or ``exact_div``."""
    p, q = Poly._coerce(p), Poly._coerce(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "exact_div":
        return p.exact_div(q)
    raise ValueError(f"unknown polynomial operation: {op}")


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    return _from_qq(Poly._coerce(p).element(_to_qq(x)))


def _render_rational(value: Fraction) -> str:
    value = _to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _render_poly(p: Poly, variable: str) -> str:
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = _render_rational(magnitude)
        else:
            power = variable if k == 1 else f"{variable}^{k}"
            body = power if magnitude == 1 else f"{_render_rational(magnitude)}*{power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    negative, body = terms[0]
    text = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def render(value: Coefficient, variable: str = "u") -> str:
    """Canonical text: ``p/q`` for rationals, ``c0 + c1*u + c2*u^2`` for polynomials."""
    if isinstance(value, Poly):
        if value.is_constant():
            return _render_rational(value.constant_value())
        return _render_poly(value, variable)
    return _render_rational(value)


def render_all(values: Sequence[Coefficient], variable: str = "u") -> list:
    return [render(v, variable) for v in values]
