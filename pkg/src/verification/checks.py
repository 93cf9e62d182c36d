"""The reproduction suite: every reference matrix, sequence and identity as a check.

Check ids sort into groups:

    01 golden matrices        06 continued fractions     11 supplementary identities
    02 involutions            07 dual-route moment arrays
    03 power identity         08 production matrices
    04 Hankel numbers         09 OEIS fixtures
    05 polynomial Hankels     10 seeded property suites
"""
import random
from fractions import Fraction
from functools import partial
from math import comb
from typing import Callable, Dict, List, Tuple

from ..algebra.coeffring import Poly, U, specialize
from ..algebra.families import (
    catalan,
    catalan_matrices,
    chebyshev_U_closed,
    chebyshev_U_coefficients,
    chebyshev_U_eval,
    corollary_involution,
    factorization_base_pair,
    factorization_closed_form,
    factorization_factor,
    factorization_involution,
    gen_cheb_array,
    gen_cheb_pair,
    general_family,
    general_family_moment_pair,
    general_involution,
    generalized_chebyshev_value,
    k_theorem_family,
    k_theorem_involution,
    k_theorem_moment_pair,
    main_theorem_family,
    main_theorem_involution,
    necessity_probe,
    orthogonal_involution,
    pascal,
    rna_base_pair,
    rna_involution,
    signed_pascal,
    ternary,
    tridiagonal_template_pair,
)
from ..algebra.almost import (
    a035929_series,
    appendix_coefficient_pair,
    appendix_inverse_pair,
    appendix_jfraction,
    appendix_moment_pipeline,
    chebyshev_T_array,
    parameterized_T_array,
    somos_series,
    somos_shifted,
)
from ..algebra.jfrac import JFraction, favard_array, heilermann, series_to_jfraction
from ..algebra.matrices import coefficient_array, matrix_inverse
from ..algebra.riordan import (
    RiordanPair,
    inverse_from_az,
    involution_check,
    moment_coefficient_array,
    moment_polys,
    production_matrix,
    rinv,
)
from ..algebra.series import Series
from ..algebra.transforms import (
    binomial_transform,
    cofactor_determinant,
    hankel,
    invert_transform,
    leading_minors,
    matrix_sums,
    reverse_rows,
    row_polynomial_values,
)
from ..oeis.bfile import OEISClient
from ..utils.exceptions import CheckFailed
from . import golden
from .registry import (
    check,
    expect_equal,
    expect_involution,
    expect_matrix,
    expect_production,
    expect_same_matrix,
    expect_sequence,
    register,
)

SIZE = 16
ORDER = SIZE - 1
SEED = 1729

GENERAL_PARAMS = [(3, 2), (1, 2), (2, 1), (2, 2), (4, 3)]
COROLLARY_PARAMS = [(2, 1), (1, 2), (3, 2)]
K_PARAMS = [(k, m) for k in (2, 3, 4) for m in range(k + 1)]
POWERS = range(-2, 4)


def _x(order: int) -> Series:
    return Series.variable(order)


def _flatten(rows) -> list:
    return [c for row in rows for c in row]


def _fixture(anumber: str) -> List[int]:
    return OEISClient().load(anumber).values()


def random_factorization_params(count: int = 10, seed: int = SEED) -> List[Tuple[int, int, int, int]]:
    rng = random.Random(seed)
    return [tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(count)]


def random_pair(rng: random.Random, order: int) -> RiordanPair:
    g = [rng.choice((1, -1, 2))] + [rng.randint(-3, 3) for _ in range(order)]
    f = [0, rng.choice((1, -1, 2))] + [rng.randint(-3, 3) for _ in range(order - 1)]
    return RiordanPair(Series(g, order), Series(f, order))


# -- 01 golden matrices -------------------------------------------------------------


@check("01.golden.a106566", "(1, xc) matches the reference rows (A106566)")
def golden_a106566() -> None:
    expect_matrix(catalan_matrices(6)["(1, xc)"].to_matrix(7), golden.A106566_ROWS)


@check("01.golden.c-xc3", "(c, -xc^3) matches the reference rows")
def golden_c_xc3() -> None:
    expect_matrix(main_theorem_involution(1, 6).to_matrix(7), golden.C_XC3_ROWS)


@check("01.golden.c2-xc3", "(c^2, -xc^3) matches the reference rows")
def golden_c2_xc3() -> None:
    expect_matrix(main_theorem_involution(2, 6).to_matrix(7), golden.C2_XC3_ROWS)


@check("01.golden.general-term", "unsigned entries of (c, -xc^3) and (c^2, -xc^3) follow their binomial closed forms")
def golden_general_term() -> None:
    closed_forms = {
        1: lambda n, k: Fraction(3 * k + 1, n + 2 * k + 1) * comb(2 * n + k, n - k),
        2: lambda n, k: Fraction(3 * k + 2, n + 2 * k + 2) * comb(2 * n + k + 1, n - k),
    }
    for m, closed_form in closed_forms.items():
        matrix = main_theorem_involution(m, 12).to_matrix(13)
        for n in range(13):
            for k in range(n + 1):
                got, expected = abs(matrix.entry(n, k)), closed_form(n, k)
                if got != expected:
                    raise CheckFailed(f"m = {m} entry ({n},{k}): got {got}, expected {expected}")


@check("01.golden.signed-pascal", "(1/(1-x), -x/(1-x)) matches the reference rows")
def golden_signed_pascal() -> None:
    expect_matrix(signed_pascal(6).to_matrix(7), golden.SIGNED_PASCAL_ROWS)


@check("01.golden.chebyshev-u-half", "(1/(1+x^2), x/(1+x^2)) holds the coefficients of U_n(x/2)")
def golden_chebyshev_u_half() -> None:
    expect_matrix(gen_cheb_array(0, 1, 0, 0, 7), golden.CHEBYSHEV_U_HALF_ROWS)


def _moment_hankel_array(family_builder: Callable[[int], RiordanPair], rows: int):
    moments = moment_polys(family_builder(2 * rows - 2), 2 * rows - 1)
    return coefficient_array(hankel(moments, rows - 1), rows)


@check("01.golden.h2-array", "Hankel polynomials of mu^(2)(y) have the signed Pascal coefficient array")
def golden_h2_array() -> None:
    expect_matrix(_moment_hankel_array(partial(main_theorem_family, 2), 7), golden.SIGNED_PASCAL_ROWS)


@check("01.golden.h1-array", "Hankel polynomials of mu^(1)(y) have the reference coefficient array")
def golden_h1_array() -> None:
    array = _moment_hankel_array(partial(main_theorem_family, 1), 6)
    expect_matrix(array, golden.HANKEL_H1_ROWS)
    expect_matrix(reverse_rows(array), golden.HANKEL_H1_REVERSED_ROWS, "reversal")
    expect_same_matrix(reverse_rows(array), factorization_base_pair(2, 1, 0, 0, 5).to_matrix(6), "reversal and (1/(1+x)^2, x/(1+x)^2)")


@check("01.golden.general-3-2", "general (a, b) = (3, 2) involution matches the reference rows")
def golden_general_3_2() -> None:
    expect_matrix(general_involution(3, 2, 6).to_matrix(7), golden.GENERAL_3_2_ROWS)


@check("01.golden.general-1-2", "general (a, b) = (1, 2) involution matches the reference rows")
def golden_general_1_2() -> None:
    pair = general_involution(1, 2, 6)
    expect_matrix(pair.to_matrix(7), golden.GENERAL_1_2_ROWS)
    x = _x(6)
    closed = (Series((1, -2, -7), 6).sqrt1() - 3 * x - 1) * Fraction(1, 4)
    if not pair.f.agrees_with(closed):
        raise CheckFailed("f differs from (sqrt(1-2x-7x^2) - 3x - 1)/4")


@check("01.golden.one-plus-x-squared", "(1/(1+x)^2, x/(1+x)^2) and its inverse (c^2, xc^2)")
def golden_one_plus_x_squared() -> None:
    base = factorization_base_pair(2, 1, 0, 0, 6)
    expect_matrix(base.to_matrix(7), golden.INV_ONE_PLUS_X_SQUARED_ROWS)
    expect_matrix(catalan_matrices(6)["(c^2, xc^2)"].to_matrix(7), golden.C2_XC2_ROWS, "(c^2, xc^2)")
    expect_matrix(rinv(base).to_matrix(7), golden.C2_XC2_ROWS, "inverse")


@check("01.golden.production-square", "production matrix of (1/(1+x)^2, x/(1+x)^2)^-1 is tridiagonal 1, 2, 1")
def golden_production_square() -> None:
    expect_production(production_matrix(rinv(factorization_base_pair(2, 1, 0, 0, 8)), 7), golden.PRODUCTION_SQUARE_ROWS)


@check("01.golden.production-cube", "production matrix of (1/(1+x)^3, x/(1+x)^3)^-1 is four-diagonal 1, 3, 3, 1")
def golden_production_cube() -> None:
    cube = Series((1, 1), 8) ** 3
    pair = RiordanPair(cube.inverse(), _x(8) / cube)
    matrix = production_matrix(rinv(pair), 7)
    expect_production(matrix, golden.PRODUCTION_CUBE_ROWS)
    expect_equal(matrix.bandwidth(), 4, "bandwidth")


@check("01.golden.factorization-2-1", "(1/(1+x)^2, x/(1+x)^2) (c(-x)^2, -xc(-x)^2) begins -4, 16, -68")
def golden_factorization_2_1() -> None:
    base = factorization_base_pair(2, 1, 0, 0, 6)
    c_neg = catalan(6).scale_argument(-1)
    factor = RiordanPair(c_neg * c_neg, -_x(6) * c_neg * c_neg)
    expect_same_matrix(factorization_factor(base).to_matrix(7), factor.to_matrix(7), "factor")
    expect_matrix(factorization_involution(base).to_matrix(7), golden.FACTORIZATION_2_1_ROWS)
    expect_matrix(factorization_closed_form(2, 1, 0, 0, 6).to_matrix(7), golden.FACTORIZATION_2_1_ROWS, "closed form")


@check("01.golden.factorization-2-1-1-1", "factorization of ((1+x+x^2)/(1+x)^2, x/(1+x)^2) begins -2, 6, -16")
def golden_factorization_2_1_1_1() -> None:
    base = factorization_base_pair(2, 1, 1, 1, 5)
    factor = factorization_factor(base)
    expect_matrix(base.to_matrix(6), golden.FACTORIZATION_2_1_1_1_BASE_ROWS, "base")
    expect_matrix(factor.to_matrix(6), golden.FACTORIZATION_2_1_1_1_FACTOR_ROWS, "factor")
    expect_matrix((base * factor).to_matrix(6), golden.FACTORIZATION_2_1_1_1_ROWS, "product")
    c_neg = catalan(5).scale_argument(-1)
    expect_same_matrix(
        factor.to_matrix(6), RiordanPair(Series((1, 1), 5).inverse(), c_neg - 1).to_matrix(6), "factor and (1/(1+x), c(-x)-1)"
    )
    closed = factorization_closed_form(2, 1, 1, 1, 5)
    expect_same_matrix(closed.to_matrix(6), (base * factor).to_matrix(6), "closed form and product")
    g = Series((1, 1, 1), 5) / Series((1, 3, 1), 5)
    if not closed.g.agrees_with(g):
        raise CheckFailed("G differs from (1+x+x^2)/(1+3x+x^2)")


@check("01.golden.corollary-2-1", "(1, -x/q c(x^2/q^2)), q = 1+4x+x^2, begins 4, 16, 68 in column 1")
def golden_corollary_2_1() -> None:
    expect_matrix(corollary_involution(2, 1, 6).to_matrix(7), golden.COROLLARY_2_1_ROWS)


@check("01.golden.rna", "RNA base array, factor and involution match the reference rows")
def golden_rna() -> None:
    base = rna_base_pair(5)
    expect_matrix(base.to_matrix(6), golden.RNA_BASE_ROWS, "base")
    expect_matrix(factorization_factor(base).to_matrix(6), golden.RNA_FACTOR_ROWS, "factor")
    expect_matrix(rna_involution(6).to_matrix(7), golden.RNA_ROWS, "involution")
    expect_same_matrix(
        orthogonal_involution(Fraction(-1, 2), 1, 6).to_matrix(7), rna_involution(6).to_matrix(7), "closed form and product"
    )


@check("01.golden.t3-xt5", "moment coefficient array of the k = 3, m = 3 family is (t^3, -xt^5)")
def golden_t3_xt5() -> None:
    expect_matrix(k_theorem_involution(3, 3, 5).to_matrix(6), golden.T3_XT5_ROWS)
    expect_matrix(moment_coefficient_array(k_theorem_family(3, 3, 5), 6), golden.T3_XT5_ROWS, "moment route")
    expect_sequence(moment_polys(k_theorem_family(3, 3, 4), 5), golden.TERNARY_MOMENT_POLYS, "moment polynomials")


@check("01.golden.ternary-hankel-array", "Hankel polynomials of the ternary moments have the reference coefficient array")
def golden_ternary_hankel_array() -> None:
    expect_matrix(_moment_hankel_array(partial(k_theorem_family, 3, 3), 6), golden.TERNARY_HANKEL_ROWS)


@check("01.golden.chebyshev-t", "almost-Riordan array of T_n and its embedded Riordan array")
def golden_chebyshev_t() -> None:
    array = chebyshev_T_array(6)
    expect_matrix(array.to_matrix(7), golden.CHEBYSHEV_T_ROWS)
    expect_matrix(array.embedded.to_matrix(6), golden.CHEBYSHEV_T_EMBEDDED_ROWS, "embedded")


@check("01.golden.parameterized-t", "parameterized almost-Riordan array and its inverse over Q[y]")
def golden_parameterized_t() -> None:
    expect_matrix(parameterized_T_array(6).to_matrix(7), golden.PARAMETERIZED_T_ROWS)
    expect_matrix(matrix_inverse(parameterized_T_array(4).to_matrix(5)), golden.PARAMETERIZED_T_INVERSE_ROWS, "inverse")


@check("01.golden.appendix-coefficients", "appendix moment coefficient array is (c(x^2), 1 - (1+x)c(x^2))")
def golden_appendix_coefficients() -> None:
    expect_matrix(appendix_coefficient_pair(7).to_matrix(8), golden.APPENDIX_COEFFICIENT_ROWS)
    result = appendix_moment_pipeline(7)
    expect_sequence(result.moments, golden.APPENDIX_MOMENT_POLYS, "moments")
    expect_matrix(result.coeff_array, golden.APPENDIX_COEFFICIENT_ROWS, "moment route")
    expect_same_matrix(
        rinv(appendix_coefficient_pair(7)).to_matrix(8), appendix_inverse_pair(7).to_matrix(8), "reference inverse"
    )
    if involution_check(appendix_coefficient_pair(7), 5).holds:
        raise CheckFailed("the appendix coefficient array squares to the identity")
    if not (-appendix_inverse_pair(10).f).agrees_with(a035929_series(10)):
        raise CheckFailed("second inverse component is not -x/(1 - (1-x) x c(x))")


@check("01.golden.necessity", "square of the s-parameterized moment array; only s = 1 gives an involution")
def golden_necessity() -> None:
    matrix = necessity_probe(5).to_matrix(6)
    square = matrix @ matrix
    expect_matrix(square, golden.NECESSITY_SQUARE_ROWS)
    if not square.specialize(1).is_identity():
        raise CheckFailed("s = 1 does not give the identity")
    if square.specialize(2).is_identity():
        raise CheckFailed("s = 2 gives the identity")


# -- 02 / 03 involutions and the power identity ---------------------------------------


def involution_builders() -> Dict[str, Callable[[int], RiordanPair]]:
    builders: Dict[str, Callable[[int], RiordanPair]] = {
        "one-minus-x": lambda order: RiordanPair(Series.one(order), -_x(order)),
        "signed-pascal": signed_pascal,
        "c-xc3": partial(main_theorem_involution, 1),
        "c2-xc3": partial(main_theorem_involution, 2),
        "rna": rna_involution,
    }
    for a, b in GENERAL_PARAMS:
        builders[f"general-{a}-{b}"] = partial(general_involution, a, b)
    for i, params in enumerate(random_factorization_params(), start=1):
        builders[f"factorization-random-{i:02d}"] = lambda order, p=params: factorization_involution(
            factorization_base_pair(*p, order)
        )
    for a, b in COROLLARY_PARAMS:
        builders[f"corollary-{a}-{b}"] = partial(corollary_involution, a, b)
    for k, m in K_PARAMS:
        builders[f"k-theorem-{k}-{m}"] = partial(k_theorem_involution, k, m)
    return builders


def _involution(build: Callable[[int], RiordanPair]) -> None:
    expect_involution(build(ORDER), SIZE)


def _power_identity(build: Callable[[int], RiordanPair]) -> None:
    pair = build(ORDER)
    for m in POWERS:
        expect_involution(pair.with_g_power(m), SIZE, f"m = {m}")


for _name, _build in involution_builders().items():
    register(f"02.involution.{_name}", f"{_name} squares to the identity at {SIZE}x{SIZE}", partial(_involution, _build))
    register(f"03.power.{_name}", f"(g^m, f) of {_name} is an involution for m = -2..3", partial(_power_identity, _build))


# -- 04 Hankel numbers ------------------------------------------------------------------


def _diagonal_sums(g_power: int, terms: int) -> list:
    c = catalan(terms - 1)
    return matrix_sums(RiordanPair(c ** g_power, _x(terms - 1) * c ** 3).to_matrix(terms), "diagonal")


def _fibonacci(count: int) -> List[int]:
    values = [0, 1]
    while len(values) < count:
        values.append(values[-1] + values[-2])
    return values


@check("04.hankel.catalan", "Catalan numbers and their shift both have Hankel transform 1")
def hankel_catalan() -> None:
    c = catalan(13).coeffs
    expect_sequence(hankel(c, 6), [1] * 7, "C_n")
    expect_sequence(hankel(c[1:], 6), [1] * 7, "C_(n+1)")


@check("04.hankel.a081696", "diagonal sums of (c, xc^3): Hankel 2^n, shifted 2^n (1 - n)")
def hankel_a081696() -> None:
    a = _diagonal_sums(1, 14)
    expect_sequence(a, golden.A081696_PREFIX, "diagonal sums")
    expect_sequence(hankel(a, 6), [2 ** n for n in range(7)], "Hankel")
    expect_sequence(hankel(a[1:], 6), [2 ** n * (1 - n) for n in range(7)], "shifted Hankel")


@check("04.hankel.a109262", "diagonal sums of (c^2, xc^3): Hankel F_(2n+1)")
def hankel_a109262() -> None:
    a = _diagonal_sums(2, 13)
    expect_sequence(a, golden.A109262_PREFIX, "diagonal sums")
    fib = _fibonacci(14)
    expect_sequence(hankel(a, 6), [fib[2 * n + 1] for n in range(7)], "Hankel")


@check("04.hankel.ternary", "ternary numbers have Hankel transform 1, 2, 11, 170, 7429")
def hankel_ternary() -> None:
    expect_sequence(hankel(ternary(8).coeffs, 4), golden.TERNARY_HANKEL)


def _general_sums(a: int, b: int, mode: str, terms: int) -> list:
    return matrix_sums(general_involution(a, b, terms - 1).to_matrix(terms), mode)


@check("04.hankel.general-row-sums", "row sums of the (1, 2) involution: Hankel (-1)^n 2^C(n,2), absolute 2^C(n,2)")
def hankel_general_row_sums() -> None:
    rows = _general_sums(1, 2, "row", 13)
    absolute = _general_sums(1, 2, "abs_row", 13)
    expect_sequence(rows, golden.GENERAL_1_2_ROW_SUMS, "row sums")
    expect_sequence(absolute, golden.GENERAL_1_2_ABS_ROW_SUMS, "absolute row sums")
    expect_sequence(hankel(rows, 6), [(-1) ** n * 2 ** comb(n, 2) for n in range(7)], "row-sum Hankel")
    expect_sequence(hankel(absolute, 6), [2 ** comb(n, 2) for n in range(7)], "absolute row-sum Hankel")
    rows = _general_sums(3, 2, "row", 13)
    absolute = _general_sums(3, 2, "abs_row", 13)
    expect_sequence(rows, golden.GENERAL_3_2_ROW_SUMS, "(3, 2) row sums")
    expect_sequence(absolute, golden.GENERAL_3_2_ABS_ROW_SUMS, "(3, 2) absolute row sums")
    expect_sequence(hankel(rows, 6), [2 ** comb(n, 2) for n in range(7)], "(3, 2) row-sum Hankel")
    expect_sequence(hankel(absolute, 6), [3 ** n * 2 ** comb(n, 2) for n in range(7)], "(3, 2) absolute row-sum Hankel")


@check("04.hankel.corollary-row-sums", "row sums of the q = 1+4x+x^2 corollary: Hankel 2^C(n+1,2) [x^n] 1/(1-2x+2x^2)")
def hankel_corollary_row_sums() -> None:
    rows = matrix_sums(corollary_involution(2, 1, 12).to_matrix(13), "row")
    expect_sequence(rows, golden.COROLLARY_2_1_ROW_SUMS[:13], "row sums")
    weights = Series((1, -2, 2), 6).inverse().coeffs
    expect_sequence(hankel(rows, 6), [2 ** comb(n + 1, 2) * weights[n] for n in range(7)], "Hankel")


@check("04.hankel.somos", "Somos pair: both sequences have Hankel transform (-1)^n")
def hankel_somos() -> None:
    a = somos_series(14).coeffs
    expect_sequence(a, golden.SOMOS_PREFIX, "sequence")
    expect_sequence(hankel(a, 7), [(-1) ** n for n in range(8)], "Hankel")
    expect_sequence(hankel(somos_shifted(14).coeffs, 7), [(-1) ** n for n in range(8)], "shifted Hankel")


# -- 05 polynomial Hankels ----------------------------------------------------------------


@check("05.poly-hankel.mu2", "Hankel transform of mu^(2)(y) is (1 - y)^n")
def poly_hankel_mu2() -> None:
    moments = moment_polys(main_theorem_family(2, 10), 11)
    expect_sequence(hankel(moments, 5), [(1 - U) ** n for n in range(6)])


@check("05.poly-hankel.h1", "Hankel transform of mu^(1)(y) has general term (-1)^k C(2n+1-k, 2n+1-2k)")
def poly_hankel_h1() -> None:
    moments = moment_polys(main_theorem_family(1, 10), 11)
    expected = [sum(((-1) ** k * comb(2 * n + 1 - k, 2 * n + 1 - 2 * k) * U ** k for k in range(n + 1)), 0 * U) for n in range(6)]
    expect_sequence(hankel(moments, 5), expected)


def _general_poly_hankel(a: int, b: int) -> None:
    moments = moment_polys(general_family(a, b, 8), 9)
    expected = [(-1) ** n * (U - a + 1) ** n * b ** comb(n, 2) for n in range(5)]
    expect_sequence(hankel(moments, 4), expected, f"(a, b) = ({a}, {b})")


for _a, _b in [(3, 2), (1, 2)]:
    register(
        f"05.poly-hankel.general-{_a}-{_b}",
        f"Hankel transform of the ({_a}, {_b}) moments is (-1)^n (y-a+1)^n b^C(n,2)",
        partial(_general_poly_hankel, _a, _b),
    )


@check("05.poly-hankel.ternary", "Hankel polynomials of the ternary moments through the quartic row")
def poly_hankel_ternary() -> None:
    moments = moment_polys(k_theorem_family(3, 3, 8), 9)
    transform = hankel(moments, 4)
    expect_matrix(coefficient_array(transform, 5), golden.TERNARY_HANKEL_ROWS[:5])
    expect_sequence([specialize(h, 1) for h in transform], [1, 1, 3, 26, 646], "y = 1")
    expect_sequence([specialize(h, 0) for h in transform], [1, 3, 26, 646, 45885], "y = 0")


# -- 06 continued fractions -------------------------------------------------------------

CF_ORDER = 10
CF_DEPTH = CF_ORDER // 2


def _row_sums_series(a: int, b: int, mode: str, order: int) -> Series:
    return Series(_general_sums(a, b, mode, order + 1), order)


REFERENCE_CFS: Dict[str, Tuple[Callable[[], JFraction], Callable[[int], Series]]] = {
    "mu2": (
        lambda: JFraction.periodic(1, [2 - U], [1 - U], 2, 1),
        lambda order: main_theorem_family(2, order).inverse().g,
    ),
    "c-squared": (
        lambda: JFraction.periodic(1, [], [], 2, 1),
        lambda order: catalan(order) ** 2,
    ),
    "catalan": (
        lambda: JFraction.periodic(1, [1], [1], 2, 1),
        catalan,
    ),
    "general-3-2": (
        lambda: JFraction.periodic(1, [4 - U], [2 - U], 3, 2),
        lambda order: general_family(3, 2, order).inverse().g,
    ),
    "general-1-2": (
        lambda: JFraction.periodic(1, [-U], [-U], 1, 2),
        lambda order: general_family(1, 2, order).inverse().g,
    ),
    "a225887": (
        lambda: JFraction.periodic(1, [4], [2], 3, 2),
        lambda order: general_involution(3, 2, order).g,
    ),
    "row-sums-3-2": (
        lambda: JFraction.periodic(1, [3], [1], 3, 2),
        lambda order: _row_sums_series(3, 2, "row", order),
    ),
    "abs-row-sums-3-2": (
        lambda: JFraction.periodic(1, [5], [3], 3, 2),
        lambda order: _row_sums_series(3, 2, "abs_row", order),
    ),
    "row-sums-1-2": (
        lambda: JFraction.periodic(1, [-1], [-1], 1, 2),
        lambda order: _row_sums_series(1, 2, "row", order),
    ),
    "abs-row-sums-1-2": (
        lambda: JFraction.periodic(1, [1], [1], 1, 2),
        lambda order: _row_sums_series(1, 2, "abs_row", order),
    ),
    "appendix": (
        appendix_jfraction,
        lambda order: Series(appendix_moment_pipeline(order).moments, order),
    ),
}


def _cf_round_trip(name: str) -> None:
    build, reference = REFERENCE_CFS[name]
    jf = build()
    series = jf.to_series(CF_ORDER)
    if not series.agrees_with(reference(CF_ORDER)):
        raise CheckFailed(f"expansion differs from the moment series: {series.render()}")
    peeled = series_to_jfraction(series, CF_DEPTH)
    expect_equal(peeled, jf.prefix(CF_DEPTH), "peeled fraction")
    transform = hankel(series.coeffs, CF_DEPTH - 1)
    expect_sequence([heilermann(jf, n) for n in range(CF_DEPTH)], transform, "Heilermann against determinants")


for _cf_name in REFERENCE_CFS:
    register(
        f"06.jfrac.{_cf_name}",
        f"{_cf_name}: J-fraction expands to the moment series, peels back, and Heilermann matches",
        partial(_cf_round_trip, _cf_name),
    )


@check("06.jfrac.heilermann-sequences", "Heilermann on peeled fractions equals determinant Hankels of the reference sequences")
def heilermann_sequences() -> None:
    sequences = {
        "A081696": _diagonal_sums(1, 13),
        "A109262": _diagonal_sums(2, 13),
        "ternary": list(ternary(12).coeffs),
        "somos": list(somos_series(12).coeffs),
        "A182486": list(somos_shifted(12).coeffs),
    }
    for label, values in sequences.items():
        jf = series_to_jfraction(Series(values, 12), 6)
        expect_sequence([heilermann(jf, n) for n in range(6)], hankel(values, 5), label)


# -- 07 dual-route moment arrays -----------------------------------------------------------


def _dual_main(m: int) -> None:
    expect_same_matrix(
        moment_coefficient_array(main_theorem_family(m, ORDER), SIZE),
        main_theorem_involution(m, ORDER).to_matrix(SIZE),
    )


def _dual_general(a: int, b: int) -> None:
    moments = moment_coefficient_array(general_family(a, b, ORDER), SIZE)
    expect_same_matrix(moments, general_involution(a, b, ORDER).to_matrix(SIZE), "moments and closed form")
    expect_same_matrix(moments, general_family_moment_pair(a, b, ORDER).to_matrix(SIZE), "moments and bivariate pair")


def _dual_k(k: int, m: int) -> None:
    moments = moment_coefficient_array(k_theorem_family(k, m, ORDER), SIZE)
    expect_same_matrix(moments, k_theorem_involution(k, m, ORDER).to_matrix(SIZE), "moments and closed form")
    expect_same_matrix(moments, k_theorem_moment_pair(k, m, ORDER).to_matrix(SIZE), "moments and bivariate pair")


for _m in (1, 2):
    register(f"07.dual-route.main-{_m}", f"main theorem m = {_m}: moment array equals the involution", partial(_dual_main, _m))
for _a, _b in GENERAL_PARAMS:
    register(
        f"07.dual-route.general-{_a}-{_b}",
        f"(a, b) = ({_a}, {_b}): moment array equals the closed-form involution",
        partial(_dual_general, _a, _b),
    )
for _k, _m in K_PARAMS:
    register(
        f"07.dual-route.k-theorem-{_k}-{_m}",
        f"k = {_k}, m = {_m}: moment array equals (g^m, -x g^(2k-1))",
        partial(_dual_k, _k, _m),
    )


# -- 08 production matrices -------------------------------------------------------------------


@check("08.prodmat.random", "series route equals M^-1 Mbar on 10 seeded random pairs")
def prodmat_random() -> None:
    rng = random.Random(SEED + 8)
    for i in range(10):
        pair = random_pair(rng, 10)
        production_matrix(pair, 8)
        expect_same_matrix(inverse_from_az(pair).to_matrix(9), rinv(pair).to_matrix(9), f"pair {i}: A/Z inverse and rinv")


@check("08.prodmat.tridiagonal-template", "(gamma, delta, alpha, beta) template gives a tridiagonal production matrix")
def prodmat_template() -> None:
    for gamma, delta, alpha, beta in [(2, 3, 1, 5), (1, 1, 2, 1), (Fraction(1, 2), -1, 3, 2)]:
        pair = tridiagonal_template_pair(gamma, delta, alpha, beta, 10)
        moments = rinv(pair)
        rows = [[0] * 8 for _ in range(8)]
        rows[0][0], rows[1][0] = gamma, delta
        for i in range(8):
            if i + 1 < 8:
                rows[i][i + 1] = 1
            if i >= 1:
                rows[i][i] = alpha
            if i >= 2:
                rows[i][i - 1] = beta
        expect_production(production_matrix(moments, 8), rows, f"template {gamma, delta, alpha, beta}")
        expect_same_matrix(inverse_from_az(moments).to_matrix(9), pair.to_matrix(9), "inverse from A/Z")


# -- 09 OEIS fixtures ---------------------------------------------------------------------------


def _oeis(anumber: str, values: list, skip: int = 0, terms: int = 10) -> None:
    expected = _fixture(anumber)[skip:]
    count = min(len(values), len(expected))
    if count < terms:
        raise CheckFailed(f"{anumber}: only {count} comparable terms")
    expect_sequence(values[:count], expected[:count], anumber)


def _oeis_check(anumber: str, description: str, compute: Callable[[], Tuple[list, int]]) -> None:
    def run() -> None:
        values, skip = compute()
        _oeis(anumber, values, skip)

    register(f"09.oeis.{anumber}", description, run)


def _ternary_moments_at(y: int, count: int) -> list:
    return [specialize(m, y) for m in moment_polys(k_theorem_family(3, 3, count - 1), count)]


_oeis_check("A000108", "Catalan numbers", lambda: (list(catalan(14).coeffs), 0))
_oeis_check("A081696", "diagonal sums of (c, xc^3)", lambda: (_diagonal_sums(1, 15), 0))
_oeis_check(
    "A107842",
    "unsigned (c^2, -xc^3) read by rows",
    lambda: ([abs(v) for v in _flatten(main_theorem_involution(2, 9).to_matrix(10).rows)], 0),
)
_oeis_check("A109262", "diagonal sums of (c^2, xc^3)", lambda: (_diagonal_sums(2, 15), 0))
_oeis_check("A225887", "first column of the (3, 2) involution", lambda: (list(general_involution(3, 2, 14).g.coeffs), 0))
_oeis_check(
    "A006319",
    "column 1 of the q = 1+4x+x^2 corollary, unsigned, is A006319(n+1)",
    lambda: ([abs(v) for v in corollary_involution(2, 1, 15).f.coeffs[1:]], 1),
)
_oeis_check("A001764", "ternary numbers t = 1 + x t^3", lambda: (list(ternary(14).coeffs), 0))
_oeis_check(
    "A005156",
    "Hankel transform of the ternary moments at y = 1",
    lambda: (hankel(_ternary_moments_at(1, 19), 9), 0),
)
_oeis_check("A051255", "Hankel transform of the ternary numbers is A051255(n+1)", lambda: (hankel(ternary(18).coeffs, 9), 1))
_oeis_check("A035929", "x / (1 - (1-x) x c(x))", lambda: (list(a035929_series(14).coeffs), 0))
_oeis_check("A182486", "once-shifted Somos sequence", lambda: (list(somos_shifted(14).coeffs), 0))
_oeis_check("A000045", "diagonal sums of Pascal's triangle are F_(n+1)", lambda: (matrix_sums(pascal(14).to_matrix(15), "diagonal"), 1))
_oeis_check("A106566", "(1, xc) read by rows", lambda: (_flatten(catalan_matrices(9)["(1, xc)"].to_matrix(10).rows), 0))
_oeis_check("A128899", "(1, xc^2) read by rows", lambda: (_flatten(catalan_matrices(9)["(1, c-1)"].to_matrix(10).rows), 0))


def _a109267_pair(order: int) -> RiordanPair:
    x = _x(order)
    return RiordanPair(Series((1, -1, -1), order), x * (1 - x)).inverse()


_oeis_check("A109267", "inverse of (1-x-x^2, x(1-x)) read by rows", lambda: (_flatten(_a109267_pair(9).to_matrix(10).rows), 0))


@check("09.oeis.A005156-shifted", "ternary moments at y = 0 are T_(n+1); their Hankel transform is A005156(n+1)")
def oeis_a005156_shifted() -> None:
    moments = _ternary_moments_at(0, 19)
    expect_sequence(moments, golden.TERNARY_SHIFTED, "moments at y = 0")
    _oeis("A001764", moments, skip=1)
    _oeis("A005156", hankel(moments, 9), skip=1)


@check("09.oeis.A098746", "INVERT(1) of A098746 is the ternary moment sequence at y = 1")
def oeis_a098746() -> None:
    inverted = invert_transform(_fixture("A098746")[:11])
    expect_sequence(inverted, golden.TERNARY_MOMENTS_AT_ONE, "INVERT(1)")
    expect_sequence(_ternary_moments_at(1, 11), golden.TERNARY_MOMENTS_AT_ONE, "moments at y = 1")


@check("09.oeis.A182486-somos", "the Somos sequence is A182486 shifted once")
def oeis_a182486_somos() -> None:
    _oeis("A182486", list(somos_series(14).coeffs), skip=1)


@check("09.oeis.A109267-columns", "columns 0 and 1 of A109267 are the diagonal sums A081696 and A109262")
def oeis_a109267_columns() -> None:
    matrix = _a109267_pair(15).to_matrix(16)
    expect_sequence(matrix.column(0), _diagonal_sums(1, 16), "column 0")
    expect_sequence(matrix.column(1), _diagonal_sums(2, 15), "column 1")


# -- 10 seeded property suites ---------------------------------------------------------------------


def _random_series(rng: random.Random, order: int, constant, linear=None) -> Series:
    head = [constant] if linear is None else [constant, linear]
    return Series(head + [rng.randint(-5, 5) for _ in range(order + 1 - len(head))], order)


@check("10.property.revert", "reversion round trip on seeded random series")
def property_revert() -> None:
    rng = random.Random(SEED + 10)
    for i in range(10):
        f = _random_series(rng, 12, 0, rng.choice((1, -1, 2, Fraction(1, 3))))
        fbar = f.revert()
        if not f.compose(fbar).agrees_with(_x(12)) or not fbar.compose(f).agrees_with(_x(12)):
            raise CheckFailed(f"series {i}: f(fbar) != x")
        if fbar.revert() != f:
            raise CheckFailed(f"series {i}: reverting twice changed f")


@check("10.property.sqrt1", "sqrt1(a)^2 = a on seeded random series")
def property_sqrt1() -> None:
    rng = random.Random(SEED + 11)
    for i in range(10):
        a = _random_series(rng, 12, 1)
        if a.sqrt1() ** 2 != a:
            raise CheckFailed(f"series {i}: sqrt1(a)^2 != a")


@check("10.property.homomorphism", "pair products, inverses and actions agree with matrix arithmetic")
def property_homomorphism() -> None:
    rng = random.Random(SEED + 12)
    for i in range(10):
        r1, r2 = random_pair(rng, 8), random_pair(rng, 8)
        expect_same_matrix((r1 * r2).to_matrix(9), r1.to_matrix(9) @ r2.to_matrix(9), f"pair {i} product")
        expect_same_matrix(r1.inverse().to_matrix(9), matrix_inverse(r1.to_matrix(9)), f"pair {i} inverse")
        h = _random_series(rng, 8, rng.randint(-3, 3))
        expect_sequence(list(r1.act(h).coeffs), r1.to_matrix(9).apply(list(h.coeffs)), f"pair {i} action")


@check("10.property.hankel-binomial", "Hankel transform is invariant under the binomial transform")
def property_hankel_binomial() -> None:
    rng = random.Random(SEED + 13)
    for i in range(10):
        a = [rng.randint(-4, 4) for _ in range(11)]
        expect_sequence(hankel(binomial_transform(a), 5), hankel(a, 5), f"sequence {i}")


@check("10.property.bareiss-cofactor", "fraction-free elimination equals cofactor expansion on small rational and polynomial matrices")
def property_bareiss_cofactor() -> None:
    rng = random.Random(SEED + 14)
    for i in range(20):
        n = rng.randint(1, 4)
        matrix = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        expected = [cofactor_determinant([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]
        expect_sequence(leading_minors(matrix), expected, f"matrix {i}")
    for i in range(20):
        n = rng.randint(1, 4)
        matrix = [[Poly([rng.randint(-2, 2) for _ in range(3)]) for _ in range(n)] for _ in range(n)]
        expected = [cofactor_determinant([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]
        expect_equal(leading_minors(matrix), expected, f"polynomial matrix {i}")


@check("10.property.factorization", "factorization involutions of seeded random pairs, product against closed form")
def property_factorization() -> None:
    rng = random.Random(SEED + 15)
    done = 0
    while done < 10:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if b == 0:
            continue
        product = factorization_involution(factorization_base_pair(a, b, c, d, ORDER))
        expect_involution(product, SIZE, f"(a, b, c, d) = {(a, b, c, d)}")
        closed = factorization_closed_form(a, b, c, d, ORDER)
        expect_same_matrix(closed.to_matrix(SIZE), product.to_matrix(SIZE), f"closed form {(a, b, c, d)}")
        done += 1


# -- 11 supplementary identities ---------------------------------------------------------------------


@check("11.extra.catalan-identity", "(1, c - 1) = (1, xc^2)")
def extra_catalan_identity() -> None:
    c = catalan(ORDER)
    expect_same_matrix(
        catalan_matrices(ORDER)["(1, c-1)"].to_matrix(SIZE), RiordanPair(Series.one(ORDER), _x(ORDER) * c * c).to_matrix(SIZE)
    )


@check("11.extra.orthogonal-polynomials", "rows of the m = 2 family are U_n(z) + y U_(n-1)(z) + y U_(n-2)(z), z = (x-2)/2")
def extra_orthogonal_polynomials() -> None:
    family = main_theorem_family(2, 9).to_matrix(10)
    for y in (Fraction(3, 2), Fraction(-2), Fraction(0)):
        for x in (Fraction(5), Fraction(-1, 3)):
            z = (x - 2) / 2
            expected = [
                chebyshev_U_eval(n, z) + (y * chebyshev_U_eval(n - 1, z) if n >= 1 else 0) + (y * chebyshev_U_eval(n - 2, z) if n >= 2 else 0)
                for n in range(10)
            ]
            expect_sequence(row_polynomial_values(family.specialize(y), x), expected, f"y = {y}, x = {x}")


@check("11.extra.generalized-chebyshev", "generalized Chebyshev arrays agree with the Q_n closed form")
def extra_generalized_chebyshev() -> None:
    for r, s, lam, mu in [(1, 4, 2, -3), (-2, 1, 0, 1), (Fraction(1, 2), Fraction(9, 4), -1, 2)]:
        matrix = gen_cheb_array(r, s, lam, mu, 9)
        for x in (Fraction(5, 3), Fraction(-2)):
            expected = [generalized_chebyshev_value(n, x, r, s, lam, mu) for n in range(9)]
            expect_sequence(row_polynomial_values(matrix, x), expected, f"(r, s, lam, mu) = {(r, s, lam, mu)}")


@check("11.extra.chebyshev-u", "U_n recurrence, closed sum and coefficient rows agree")
def extra_chebyshev_u() -> None:
    x = _x(9)
    array = RiordanPair((1 + x * x).inverse(), 2 * x / (1 + x * x)).to_matrix(10)
    for n in range(10):
        expect_sequence(list(array.rows[n]), chebyshev_U_coefficients(n), f"row {n}")
        for value in (Fraction(1, 3), Fraction(-2)):
            expect_equal(chebyshev_U_eval(n, value), chebyshev_U_closed(n, value), f"U_{n}({value})")


@check("11.extra.favard", "Favard recurrence of the mu^(2) fraction rebuilds the m = 2 family")
def extra_favard() -> None:
    jf = JFraction.periodic(1, [2 - U], [1 - U], 2, 1)
    expect_same_matrix(favard_array(jf.recurrence(), 8), main_theorem_family(2, 7).to_matrix(8))


@check("11.extra.first-column-cf", "first column of the (a, b) involution: CF (2a-2, a-1; a, b), Hankel (a-1)^n b^C(n,2)")
def extra_first_column_cf() -> None:
    for a, b in [(3, 2), (2, 1), (2, 2), (4, 3)]:
        jf = JFraction.periodic(1, [2 * a - 2], [a - 1], a, b)
        g = general_involution(a, b, 10).g
        if not jf.to_series(10).agrees_with(g):
            raise CheckFailed(f"({a}, {b}): fraction does not expand to the first column")
        expect_sequence(hankel(g.coeffs, 5), [(a - 1) ** n * b ** comb(n, 2) for n in range(6)], f"({a}, {b}) Hankel")


@check("11.extra.gen-cheb-moments", "moment matrix of a generalized Chebyshev array has a tridiagonal production matrix")
def extra_gen_cheb_moments() -> None:
    pair = gen_cheb_pair(2, 3, 1, -1, 10)
    expect_equal(production_matrix(rinv(pair), 8).is_tridiagonal(), True, "tridiagonal")
