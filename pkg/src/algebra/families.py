"""Named series, Riordan arrays and involution constructions.

Every construction that involves a square root is expanded with ``sqrt1``;
nothing here manipulates radicals symbolically.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, isqrt
from typing import Dict, List, Optional, Tuple

from ..utils.exceptions import DegenerateParameters, ExpressionError
from ..utils.logger import algebra_logger
from .coeffring import U, is_zero, to_coefficient
from .matrices import LowerTriMatrix
from .riordan import RiordanPair, moment_array_pair
from .series import Series, solve_gk


def _x(order: int) -> Series:
    return Series.variable(order)


def _poly_series(coeffs, order: int) -> Series:
    return Series(coeffs, order)


# -- basic series ---------------------------------------------------------------


def catalan(order: int) -> Series:
    """c(x) = (1 - sqrt(1 - 4x)) / (2x)."""
    radical = Series((1, -4), order + 1).sqrt1()
    return (1 - radical).shift_down(1) * Fraction(1, 2)


def ternary(order: int) -> Series:
    """t(x) = 1 + x t(x)^3."""
    return solve_gk(3, order)


def quadratic(a, b, order: int) -> Series:
    """1 + a x + b x^2."""
    return _poly_series((1, a, b), order)


# -- classical arrays -----------------------------------------------------------


def pascal(order: int) -> RiordanPair:
    x = _x(order)
    return RiordanPair(1 / (1 - x), x / (1 - x))


def signed_pascal(order: int) -> RiordanPair:
    """(1/(1-x), -x/(1-x)), an involution."""
    x = _x(order)
    return RiordanPair(1 / (1 - x), -x / (1 - x))


def catalan_matrices(order: int) -> Dict[str, RiordanPair]:
    """The Catalan arrays (1, xc), (1, c - 1), (c, xc) and (c^2, xc^2)."""
    c = catalan(order)
    x = _x(order)
    one = Series.one(order)
    return {
        "(1, xc)": RiordanPair(one, x * c),
        "(1, c-1)": RiordanPair(one, c - 1),
        "(c, xc)": RiordanPair(c, x * c),
        "(c^2, xc^2)": RiordanPair(c * c, x * c * c),
    }


def gen_cheb_pair(r, s, lam, mu, order: int) -> RiordanPair:
    """((1 - lam x - mu x^2) / (1 + r x + s x^2), x / (1 + r x + s x^2))."""
    denominator = quadratic(r, s, order)
    numerator = _poly_series((1, -to_coefficient(lam), -to_coefficient(mu)), order)
    return RiordanPair(numerator / denominator, _x(order) / denominator)


def gen_cheb_array(r, s, lam, mu, n: int) -> LowerTriMatrix:
    return gen_cheb_pair(r, s, lam, mu, max(n - 1, 1)).to_matrix(n)


def tridiagonal_template_pair(gamma, delta, alpha, beta, order: int) -> RiordanPair:
    """Coefficient array whose moment matrix has Z = gamma + delta x and A = 1 + alpha x + beta x^2."""
    gamma, delta, alpha, beta = (to_coefficient(v) for v in (gamma, delta, alpha, beta))
    denominator = quadratic(alpha, beta, order)
    numerator = _poly_series((1, alpha - gamma, beta - delta), order)
    return RiordanPair(numerator / denominator, _x(order) / denominator)


# -- Chebyshev polynomials ------------------------------------------------------


def chebyshev_U_eval(n: int, x) -> Fraction:
    """U_n(x) by U_n = 2x U_{n-1} - U_{n-2}, U_0 = 1, U_1 = 2x."""
    if n < 0:
        raise ValueError("U_n needs n >= 0")
    x = Fraction(x)
    previous, current = Fraction(1), 2 * x
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, 2 * x * current - previous
    return current


def chebyshev_U_closed(n: int, x) -> Fraction:
    """sum_k C(n-k, k) (-1)^k (2x)^(n-2k)."""
    x = Fraction(x)
    return sum((comb(n - k, k) * (-1) ** k * (2 * x) ** (n - 2 * k) for k in range(n // 2 + 1)), Fraction(0))


def chebyshev_U_coefficients(n: int) -> List[int]:
    """Coefficients of U_n(x) in increasing powers of x."""
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = comb(n - k, k) * (-1) ** k * 2 ** (n - 2 * k)
    return coeffs


def chebyshev_U_generating_series(x, order: int) -> Series:
    """t / (1 - 2 x t + t^2) in the variable t, for a fixed rational x."""
    t = Series.variable(order)
    return t / _poly_series((1, -2 * Fraction(x), 1), order)


def _exact_sqrt(value: Fraction) -> Fraction:
    value = Fraction(value)
    if value < 0:
        raise DegenerateParameters(f"{value} has no rational square root")
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise DegenerateParameters(f"{value} is not a perfect square")
    return Fraction(num, den)


def generalized_chebyshev_value(n: int, x, r, s, lam, mu) -> Fraction:
    """Q_n(x) = t^n U_n(z) - lam t^(n-1) U_{n-1}(z) - mu t^(n-2) U_{n-2}(z), z = (x - r) / (2t).

    Here t = sqrt(s) must be rational and positive; U with a negative index is 0.
    """
    t = _exact_sqrt(Fraction(s))
    if t == 0:
        raise DegenerateParameters("s must be nonzero")
    z = (Fraction(x) - Fraction(r)) / (2 * t)

    def term(k: int) -> Fraction:
        return t ** k * chebyshev_U_eval(k, z) if k >= 0 else Fraction(0)

    return term(n) - Fraction(lam) * term(n - 1) - Fraction(mu) * term(n - 2)


# -- main theorem families ------------------------------------------------------


def main_theorem_family(m: int, order: int, s=1) -> RiordanPair:
    """((1 + u x + s u x^2) / (1 + x)^m, x / (1 + x)^2) over Q[u]."""
    if m not in (1, 2):
        raise ValueError("main theorem families have m in {1, 2}")
    one_plus_x = _poly_series((1, 1), order)
    numerator = _poly_series((1, U, to_coefficient(s) * U), order)
    return RiordanPair(numerator / one_plus_x ** m, _x(order) / one_plus_x ** 2)


def main_theorem_involution(m: int, order: int) -> RiordanPair:
    """(c, -x c^3) for m = 1 and (c^2, -x c^3) for m = 2."""
    if m not in (1, 2):
        raise ValueError("main theorem families have m in {1, 2}")
    c = catalan(order)
    return RiordanPair(c ** m, -_x(order) * c ** 3)


def necessity_probe(order: int, r=1, s=U) -> RiordanPair:
    """Moment coefficient array of ((1 + r y x + s y x^2) / (1 + x)^2, x / (1 + x)^2).

    ``s`` defaults to the polynomial variable, so the array has entries in Q[s].
    """
    one_plus_x = _poly_series((1, 1), order)
    h = _poly_series((0, r, s), order)
    return moment_array_pair(h, one_plus_x ** 2, _x(order) / one_plus_x ** 2)


# -- the (a, b) family ----------------------------------------------------------


def general_family(a, b, order: int) -> RiordanPair:
    """((1 + (2 - a + u) x + (1 - a + b + u) x^2) / (1 + a x + b x^2), x / (1 + a x + b x^2))."""
    a, b = to_coefficient(a), to_coefficient(b)
    denominator = quadratic(a, b, order)
    numerator = _poly_series((1, 2 - a + U, 1 - a + b + U), order)
    return RiordanPair(numerator / denominator, _x(order) / denominator)


def general_family_moment_pair(a, b, order: int) -> RiordanPair:
    """Moment coefficient array of ``general_family`` as a Riordan pair."""
    a, b = to_coefficient(a), to_coefficient(b)
    denominator = quadratic(a, b, order)
    base = _poly_series((1, 2 - a, 1 - a + b), order)
    h = _poly_series((0, 1, 1), order)
    return moment_array_pair(h, denominator, _x(order) / denominator, base=base)


def general_involution(a, b, order: int) -> RiordanPair:
    """Closed form of the moment coefficient array of ``general_family``.

    With R = sqrt(1 - 2ax + (a^2 - 4b) x^2) and
    D = 1 - a + 2b + (a - 1)(a - 4b) x + (a - 1) R:
    G = 2b / D and F = (R + (a - 2b) x - 1) / D.
    """
    a, b = to_coefficient(a), to_coefficient(b)
    if is_zero(b):
        raise DegenerateParameters("b = 0 makes the closed-form denominator vanish at 0")
    radical = _poly_series((1, -2 * a, a * a - 4 * b), order).sqrt1()
    denominator = _poly_series((1 - a + 2 * b, (a - 1) * (a - 4 * b)), order) + radical * (a - 1)
    g = Series.constant(2 * b, order) / denominator
    f = (radical + _poly_series((-1, a - 2 * b), order)) / denominator
    return RiordanPair(g, f)


# -- factorization --------------------------------------------------------------


def factorization_factor(r: RiordanPair) -> RiordanPair:
    """(1 / g(fbar(-x)), fbar(-x))."""
    fbar_neg = r.f.revert().scale_argument(-1)
    return RiordanPair(r.g.compose(fbar_neg).inverse(), fbar_neg)


def factorization_involution(r: RiordanPair) -> RiordanPair:
    """R * (1 / g(fbar(-x)), fbar(-x)) is an involution for every R."""
    return r * factorization_factor(r)


def factorization_base_pair(a, b, c, d, order: int) -> RiordanPair:
    """((1 + c x + d x^2) / (1 + a x + b x^2), x / (1 + a x + b x^2))."""
    denominator = quadratic(a, b, order)
    return RiordanPair(quadratic(c, d, order) / denominator, _x(order) / denominator)


def factorization_closed_form(a, b, c, d, order: int) -> RiordanPair:
    """Closed form of ``factorization_involution(factorization_base_pair(a, b, c, d))``.

    S = sqrt(1 + 4ax + 2(2a^2 - b) x^2 + 4ab x^3 + b^2 x^4), q = 1 + 2ax + bx^2,
    F = (S - q) / (2bx) and G = b (1 + cx + dx^2)(S - q) / den with
    den = (d + (2ad - bc) x + bd x^2) S - b^2 d x^4 + b(bc - 4ad) x^3
          - 2(2a^2 d - abc + b^2) x^2 + (bc - 4ad) x - d.
    """
    a, b, c, d = (to_coefficient(v) for v in (a, b, c, d))
    if is_zero(b):
        raise DegenerateParameters("b = 0 leaves F undefined")
    work = order + 2
    s_root = _poly_series((1, 4 * a, 2 * (2 * a * a - b), 4 * a * b, b * b), work).sqrt1()
    difference = s_root - quadratic(2 * a, b, work)
    f = difference.shift_down(1) * (1 / (2 * b))
    numerator = quadratic(c, d, work) * difference * b
    denominator = _poly_series((d, 2 * a * d - b * c, b * d), work) * s_root + _poly_series(
        (-d, b * c - 4 * a * d, -2 * (2 * a * a * d - a * b * c + b * b), b * (b * c - 4 * a * d), -b * b * d),
        work,
    )
    g = numerator.shift_down(2) / denominator.shift_down(2)
    return RiordanPair(g.truncate(order), f.truncate(order))


def _corollary_core(a, b, order: int) -> Tuple[Series, Series]:
    """(1/q, c(b x^2 / q^2)) with q = 1 + 2ax + bx^2."""
    a, b = to_coefficient(a), to_coefficient(b)
    q_inv = quadratic(2 * a, b, order).inverse()
    inner = Series.monomial(b, 2, order) * q_inv * q_inv
    return q_inv, catalan(order).compose(inner)


def corollary_involution(a, b, order: int) -> RiordanPair:
    """(1, -x/q c(b x^2 / q^2)), q = 1 + 2ax + bx^2."""
    q_inv, c_inner = _corollary_core(a, b, order)
    return RiordanPair(Series.one(order), -_x(order) * q_inv * c_inner)


def orthogonal_involution(a, b, order: int) -> RiordanPair:
    """((1/q) c(b x^2 / q^2), (-x/q) c(b x^2 / q^2)): the factorization of (1/(1+ax+bx^2), x/(1+ax+bx^2))."""
    q_inv, c_inner = _corollary_core(a, b, order)
    return RiordanPair(q_inv * c_inner, -_x(order) * q_inv * c_inner)


def rna_base_pair(order: int) -> RiordanPair:
    """(1 / (1 - x/2 + x^2), x / (1 - x/2 + x^2))."""
    return factorization_base_pair(Fraction(-1, 2), 1, 0, 0, order)


def rna_involution(order: int) -> RiordanPair:
    return factorization_involution(rna_base_pair(order))


# -- g = 1 + x g^k ---------------------------------------------------------------


def _check_k_m(k: int, m: int) -> None:
    if k < 2 or not 0 <= m <= k:
        raise ValueError(f"need k >= 2 and 0 <= m <= k, got k={k}, m={m}")


def k_theorem_involution(k: int, m: int, order: int) -> RiordanPair:
    """(g^m, -x g^(2k-1)) with g = 1 + x g^k."""
    _check_k_m(k, m)
    g = solve_gk(k, order)
    return RiordanPair(g ** m, -_x(order) * g ** (2 * k - 1))


def k_theorem_family(k: int, m: int, order: int) -> RiordanPair:
    """((1 + x u (1 + x)^(k-1)) / (1 + x)^m, x / (1 + x)^k) over Q[u]."""
    _check_k_m(k, m)
    one_plus_x = _poly_series((1, 1), order)
    x = _x(order)
    numerator = Series.one(order) + (x * one_plus_x ** (k - 1)) * U
    return RiordanPair(numerator / one_plus_x ** m, x / one_plus_x ** k)


def k_theorem_moment_pair(k: int, m: int, order: int) -> RiordanPair:
    _check_k_m(k, m)
    one_plus_x = _poly_series((1, 1), order)
    x = _x(order)
    return moment_array_pair(x * one_plus_x ** (k - 1), one_plus_x ** m, x / one_plus_x ** k)


# -- named families for the command line ----------------------------------------


class FamilyKind(str, Enum):
    MAIN_THEOREM = "main-theorem"
    GENERAL_AB = "general"
    K_THEOREM = "k-theorem"
    GEN_CHEB = "gen-cheb"
    FACTORIZATION = "factorization"
    COROLLARY_AB = "corollary"
    RNA = "rna"
    CHEBYSHEV_T = "chebyshev-t"


_ARITY = {
    FamilyKind.MAIN_THEOREM: 1,
    FamilyKind.GENERAL_AB: 2,
    FamilyKind.K_THEOREM: 2,
    FamilyKind.GEN_CHEB: 4,
    FamilyKind.FACTORIZATION: 4,
    FamilyKind.COROLLARY_AB: 2,
    FamilyKind.RNA: 0,
    FamilyKind.CHEBYSHEV_T: 0,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: Tuple[Fraction, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse names such as ``general:3,2`` or ``rna``."""
        name, _, rest = text.strip().partition(":")
        try:
            kind = FamilyKind(name.strip())
        except ValueError:
            raise ExpressionError(f"unknown family: {name!r}") from None
        try:
            params = tuple(Fraction(p.strip()) for p in rest.split(",")) if rest.strip() else ()
        except (ValueError, ZeroDivisionError):
            raise ExpressionError(f"bad parameters in {text!r}") from None
        if len(params) != _ARITY[kind]:
            raise ExpressionError(f"{kind.value} takes {_ARITY[kind]} parameter(s), got {len(params)}")
        if kind in (FamilyKind.MAIN_THEOREM, FamilyKind.K_THEOREM) and any(p.denominator != 1 for p in params):
            raise ExpressionError(f"{kind.value} takes integer parameters")
        return cls(kind, params)

    def _ints(self) -> List[int]:
        return [int(p) for p in self.params]

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:" + ",".join(str(p) for p in self.params)

    def pair(self, order: int) -> RiordanPair:
        """The Riordan array the name denotes (the involution, for involution constructions)."""
        algebra_logger.debug(f"building family {self.label} at order {order}")
        p = self.params
        if self.kind is FamilyKind.MAIN_THEOREM:
            return main_theorem_involution(self._ints()[0], order)
        if self.kind is FamilyKind.GENERAL_AB:
            return general_involution(p[0], p[1], order)
        if self.kind is FamilyKind.K_THEOREM:
            k, m = self._ints()
            return k_theorem_involution(k, m, order)
        if self.kind is FamilyKind.GEN_CHEB:
            return gen_cheb_pair(*p, order)
        if self.kind is FamilyKind.FACTORIZATION:
            return factorization_involution(factorization_base_pair(*p, order))
        if self.kind is FamilyKind.COROLLARY_AB:
            return corollary_involution(p[0], p[1], order)
        if self.kind is FamilyKind.RNA:
            return rna_involution(order)
        raise ExpressionError(f"{self.kind.value} is an almost-Riordan array, not a Riordan pair")

    def family(self, order: int) -> Optional[RiordanPair]:
        """The parameterized family over Q[u] whose moments the construction describes, if any."""
        if self.kind is FamilyKind.MAIN_THEOREM:
            return main_theorem_family(self._ints()[0], order)
        if self.kind is FamilyKind.GENERAL_AB:
            return general_family(self.params[0], self.params[1], order)
        if self.kind is FamilyKind.K_THEOREM:
            k, m = self._ints()
            return k_theorem_family(k, m, order)
        return None


def family_by_name(text: str, order: int) -> RiordanPair:
    return FamilySpec.parse(text).pair(order)
