"""Reference matrices and sequences, entry for entry."""
from ..algebra.coeffring import U

A106566_ROWS = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 2, 2, 1],
    [0, 5, 5, 3, 1],
    [0, 14, 14, 9, 4, 1],
    [0, 42, 42, 28, 14, 5, 1],
]

SIGNED_PASCAL_ROWS = [
    [1],
    [1, -1],
    [1, -2, 1],
    [1, -3, 3, -1],
    [1, -4, 6, -4, 1],
    [1, -5, 10, -10, 5, -1],
    [1, -6, 15, -20, 15, -6, 1],
]

C_XC3_ROWS = [
    [1],
    [1, -1],
    [2, -4, 1],
    [5, -14, 7, -1],
    [14, -48, 35, -10, 1],
    [42, -165, 154, -65, 13, -1],
    [132, -572, 637, -350, 104, -16, 1],
]

C2_XC3_ROWS = [
    [1],
    [2, -1],
    [5, -5, 1],
    [14, -20, 8, -1],
    [42, -75, 44, -11, 1],
    [132, -275, 208, -77, 14, -1],
    [429, -1001, 910, -440, 119, -17, 1],
]

CHEBYSHEV_U_HALF_ROWS = [
    [1],
    [0, 1],
    [-1, 0, 1],
    [0, -2, 0, 1],
    [1, 0, -3, 0, 1],
    [0, 3, 0, -4, 0, 1],
    [-1, 0, 6, 0, -5, 0, 1],
]

HANKEL_H1_ROWS = [
    [1],
    [1, -2],
    [1, -4, 3],
    [1, -6, 10, -4],
    [1, -8, 21, -20, 5],
    [1, -10, 36, -56, 35, -6],
]

HANKEL_H1_REVERSED_ROWS = [
    [1],
    [-2, 1],
    [3, -4, 1],
    [-4, 10, -6, 1],
    [5, -20, 21, -8, 1],
    [-6, 35, -56, 36, -10, 1],
]

GENERAL_3_2_ROWS = [
    [1],
    [4, -1],
    [18, -9, 1],
    [86, -63, 14, -1],
    [426, -403, 133, -19, 1],
    [2162, -2469, 1070, -228, 24, -1],
    [11166, -14769, 7857, -2212, 348, -29, 1],
]

GENERAL_1_2_ROWS = [
    [1],
    [0, -1],
    [0, -1, 1],
    [0, -1, 2, -1],
    [0, -3, 3, -3, 1],
    [0, -7, 8, -6, 4, -1],
    [0, -21, 21, -16, 10, -5, 1],
]

INV_ONE_PLUS_X_SQUARED_ROWS = [
    [1],
    [-2, 1],
    [3, -4, 1],
    [-4, 10, -6, 1],
    [5, -20, 21, -8, 1],
    [-6, 35, -56, 36, -10, 1],
    [7, -56, 126, -120, 55, -12, 1],
]

C2_XC2_ROWS = [
    [1],
    [2, 1],
    [5, 4, 1],
    [14, 14, 6, 1],
    [42, 48, 27, 8, 1],
    [132, 165, 110, 44, 10, 1],
    [429, 572, 429, 208, 65, 12, 1],
]

FACTORIZATION_2_1_ROWS = [
    [1],
    [-4, -1],
    [16, 8, 1],
    [-68, -48, -12, -1],
    [304, 264, 96, 16, 1],
    [-1412, -1408, -652, -160, -20, -1],
    [6752, 7432, 4080, 1296, 240, 24, 1],
]

FACTORIZATION_2_1_1_1_BASE_ROWS = [
    [1],
    [-1, 1],
    [2, -3, 1],
    [-3, 7, -5, 1],
    [4, -14, 16, -7, 1],
    [-5, 25, -41, 29, -9, 1],
]

FACTORIZATION_2_1_1_1_FACTOR_ROWS = [
    [1],
    [-1, -1],
    [1, 3, 1],
    [-1, -8, -5, -1],
    [1, 22, 19, 7, 1],
    [-1, -64, -67, -34, -9, -1],
]

FACTORIZATION_2_1_1_1_ROWS = [
    [1],
    [-2, -1],
    [6, 6, 1],
    [-16, -30, -10, -1],
    [42, 140, 70, 14, 1],
    [-110, -642, -424, -126, -18, -1],
]

COROLLARY_2_1_ROWS = [
    [1],
    [0, -1],
    [0, 4, 1],
    [0, -16, -8, -1],
    [0, 68, 48, 12, 1],
    [0, -304, -264, -96, -16, -1],
    [0, 1412, 1408, 652, 160, 20, 1],
]

RNA_BASE_ROWS = [
    ["1"],
    ["1/2", "1"],
    ["-3/4", "1", "1"],
    ["-7/8", "-5/4", "3/2", "1"],
    ["5/16", "-5/2", "-3/2", "2", "1"],
    ["33/32", "5/16", "-19/4", "-3/2", "5/2", "1"],
]

RNA_FACTOR_ROWS = [
    ["1"],
    ["1/2", "-1"],
    ["5/4", "-1", "1"],
    ["13/8", "-11/4", "3/2", "-1"],
    ["57/16", "-9/2", "9/2", "-2", "1"],
    ["201/32", "-165/16", "35/4", "-13/2", "5/2", "-1"],
]

RNA_ROWS = [
    [1],
    [1, -1],
    [1, -2, 1],
    [2, -3, 3, -1],
    [4, -6, 6, -4, 1],
    [8, -13, 13, -10, 5, -1],
    [17, -28, 30, -24, 15, -6, 1],
]

PRODUCTION_SQUARE_ROWS = [
    [2, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0],
    [0, 1, 2, 1, 0, 0, 0],
    [0, 0, 1, 2, 1, 0, 0],
    [0, 0, 0, 1, 2, 1, 0],
    [0, 0, 0, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, 1, 2],
]

PRODUCTION_CUBE_ROWS = [
    [3, 1, 0, 0, 0, 0, 0],
    [3, 3, 1, 0, 0, 0, 0],
    [1, 3, 3, 1, 0, 0, 0],
    [0, 1, 3, 3, 1, 0, 0],
    [0, 0, 1, 3, 3, 1, 0],
    [0, 0, 0, 1, 3, 3, 1],
    [0, 0, 0, 0, 1, 3, 3],
]

T3_XT5_ROWS = [
    [1],
    [3, -1],
    [12, -8, 1],
    [55, -52, 13, -1],
    [273, -320, 117, -18, 1],
    [1428, -1938, 910, -207, 23, -1],
]

TERNARY_HANKEL_ROWS = [
    [1],
    [3, -2],
    [26, -34, 11],
    [646, -1254, 804, -170],
    [45885, -117990, 112860, -47538, 7429],
    [9304650, -29774880, 37838910, -23849850, 7447515, -920460],
]

CHEBYSHEV_T_ROWS = [
    [1],
    [0, 1],
    [-1, 0, 2],
    [0, -3, 0, 4],
    [1, 0, -8, 0, 8],
    [0, 5, 0, -20, 0, 16],
    [-1, 0, 18, 0, -48, 0, 32],
]

CHEBYSHEV_T_EMBEDDED_ROWS = [
    [1],
    [0, 2],
    [-3, 0, 4],
    [0, -8, 0, 8],
    [5, 0, -20, 0, 16],
    [0, 18, 0, -48, 0, 32],
]

PARAMETERIZED_T_ROWS = [
    [1],
    [U, 1],
    [U - 1, U, 1],
    [-U, U - 2, U, 1],
    [1 - U, -2 * U, U - 3, U, 1],
    [U, 3 - 2 * U, -3 * U, U - 4, U, 1],
    [U - 1, 3 * U, 3 * (2 - U), -4 * U, U - 5, U, 1],
]

PARAMETERIZED_T_INVERSE_ROWS = [
    [1],
    [-U, 1],
    [U ** 2 - U + 1, -U, 1],
    [-U * (U ** 2 - 2 * U + 2), U ** 2 - U + 2, -U, 1],
    [U ** 4 - 3 * U ** 3 + 4 * U ** 2 - 3 * U + 2, -U * (U ** 2 - 2 * U + 3), U ** 2 - U + 3, -U, 1],
]

APPENDIX_COEFFICIENT_ROWS = [
    [1],
    [0, -1],
    [1, -1, 1],
    [0, -2, 2, -1],
    [2, -3, 4, -3, 1],
    [0, -5, 8, -7, 4, -1],
    [5, -9, 14, -16, 11, -5, 1],
    [0, -14, 28, -32, 28, -16, 6, -1],
]

# Square of the moment coefficient array of ((1 + y x + s y x^2)/(1+x)^2, x/(1+x)^2), entries in s.
NECESSITY_SQUARE_ROWS = [
    [1],
    [0, 1],
    [2 - 2 * U, 0, 1],
    [2 * (1 - U), -2 * (U ** 2 + U - 2), 0, 1],
    [5 * U ** 2 - 16 * U + 11, -U ** 3 - 2 * U ** 2 - U + 4, -4 * U ** 2 - 2 * U + 6, 0, 1],
    [
        8 * (U ** 2 - 4 * U + 3),
        8 * U ** 3 - 14 * U ** 2 - 20 * U + 26,
        -2 * (U ** 3 + 2 * U ** 2 - 3),
        -6 * U ** 2 - 2 * U + 8,
        0,
        1,
    ],
]

# Reference sequences.
A081696_PREFIX = [1, 1, 3, 9, 29, 97, 333, 1165, 4135, 14845]
A109262_PREFIX = [1, 2, 6, 19, 63, 215, 749, 2650, 9490, 34318, 125104, 459152]
A225887_PREFIX = [1, 4, 18, 86, 426, 2162, 11166, 58438, 309042, 1648154, 8851206]
GENERAL_3_2_ROW_SUMS = [1, 3, 10, 36, 138, 558, 2362, 10398, 47326]
GENERAL_3_2_ABS_ROW_SUMS = [1, 5, 28, 164, 982, 5954, 36382, 223466, 1377538]
GENERAL_1_2_ROW_SUMS = [1, -1, 0, 0, -2, -2, -10, -26, -86]
GENERAL_1_2_ABS_ROW_SUMS = [1, 1, 2, 4, 10, 26, 74, 218, 670]
COROLLARY_2_1_ROW_SUMS = [1, -1, 5, -25, 129, -681, 3653, -19825, 108545, -598417, 3317445]
TERNARY_SHIFTED = [1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715, 8414640]
TERNARY_MOMENTS_AT_ONE = [1, 2, 5, 15, 53, 215, 971, 4745, 24540, 132235, 734572]
TERNARY_HANKEL = [1, 2, 11, 170, 7429]
SOMOS_PREFIX = [1, 0, -1, -2, -4, -10, -29, -90, -290, -960, -3246]
TERNARY_MOMENT_POLYS = [
    1,
    3 - U,
    U ** 2 - 8 * U + 12,
    -U ** 3 + 13 * U ** 2 - 52 * U + 55,
    U ** 4 - 18 * U ** 3 + 117 * U ** 2 - 320 * U + 273,
]
APPENDIX_MOMENT_POLYS = [
    1,
    -U,
    U ** 2 - U + 1,
    -U * (U ** 2 - 2 * U + 2),
    U ** 4 - 3 * U ** 3 + 4 * U ** 2 - 3 * U + 2,
    -U * (U ** 4 - 4 * U ** 3 + 7 * U ** 2 - 8 * U + 5),
]
