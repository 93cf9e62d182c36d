"""Dense exact matrices: lower-triangular realizations and production matrices."""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from ..utils.exceptions import SingularMatrix, TruncationExceeded
from .coeffring import (
    Coefficient,
    Poly,
    is_unit,
    is_zero,
    render,
    specialize,
    to_coefficient,
    unit_inverse,
)

Row = Tuple[Coefficient, ...]
Witness = Tuple[int, int, Coefficient, Coefficient]


def _zero_like() -> Coefficient:
    return to_coefficient(0)


def matmul(a: Sequence[Sequence[Coefficient]], b: Sequence[Sequence[Coefficient]]) -> List[List[Coefficient]]:
    """Plain dense product of two rectangular matrices given as row lists."""
    if a and len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    cols = len(b[0]) if b else 0
    out: List[List[Coefficient]] = []
    for row in a:
        out_row = []
        for j in range(cols):
            total = _zero_like()
            for k, aik in enumerate(row):
                if is_zero(aik):
                    continue
                bkj = b[k][j]
                if not is_zero(bkj):
                    total = total + aik * bkj
            out_row.append(total)
        out.append(out_row)
    return out


def first_difference(got: Sequence[Sequence[Coefficient]], expected: Sequence[Sequence[Coefficient]]) -> Optional[Witness]:
    """Row-major first (row, col, got, expected) where two square arrays differ."""
    for i, (grow, erow) in enumerate(zip(got, expected)):
        for j, (g, e) in enumerate(zip(grow, erow)):
            if g != e:
                return (i, j, g, e)
    return None


def _render_rows(rows: Sequence[Sequence[Coefficient]], variable: str) -> str:
    return "\n".join(" & ".join(render(c, variable) for c in row) for row in rows)


@dataclass(frozen=True)
class LowerTriMatrix:
    """n x n lower-triangular matrix; row i stores its i+1 entries on or below the diagonal."""

    rows: Tuple[Row, ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i} of a lower-triangular matrix must have {i + 1} entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "LowerTriMatrix":
        """Accept ragged rows (length i+1) or square rows with zeros above the diagonal."""
        out = []
        for i, row in enumerate(rows):
            values = [to_coefficient(c) for c in row]
            for j in range(i + 1, len(values)):
                if not is_zero(values[j]):
                    raise ValueError(f"entry ({i},{j}) above the diagonal is nonzero")
            values = values[: i + 1]
            values.extend([_zero_like()] * (i + 1 - len(values)))
            out.append(tuple(values))
        return cls(tuple(out))

    @classmethod
    def identity(cls, n: int) -> "LowerTriMatrix":
        return cls.from_rows([[0] * i + [1] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Coefficient:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise TruncationExceeded(f"entry ({i},{j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i][j] if j <= i else _zero_like()

    def row(self, i: int) -> Row:
        return self.rows[i]

    def column(self, j: int) -> List[Coefficient]:
        return [self.rows[i][j] for i in range(j, self.n)]

    def dense(self) -> List[List[Coefficient]]:
        return [list(row) + [_zero_like()] * (self.n - i - 1) for i, row in enumerate(self.rows)]

    def truncate(self, n: int) -> "LowerTriMatrix":
        if n > self.n:
            raise TruncationExceeded(f"cannot extend a {self.n}x{self.n} matrix to {n}")
        return LowerTriMatrix(self.rows[:n])

    def map(self, fn: Callable[[Coefficient], Coefficient]) -> "LowerTriMatrix":
        return LowerTriMatrix(tuple(tuple(fn(c) for c in row) for row in self.rows))

    def specialize(self, value) -> "LowerTriMatrix":
        return self.map(lambda c: specialize(c, value))

    def __matmul__(self, other: "LowerTriMatrix") -> "LowerTriMatrix":
        if other.n != self.n:
            raise ValueError("matrix sizes differ")
        rows = []
        for i in range(self.n):
            row = []
            for j in range(i + 1):
                total = _zero_like()
                for k in range(j, i + 1):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not is_zero(a) and not is_zero(b):
                        total = total + a * b
                row.append(total)
            rows.append(tuple(row))
        return LowerTriMatrix(tuple(rows))

    def apply(self, vector: Sequence[Coefficient]) -> List[Coefficient]:
        """Matrix times a column vector of length n."""
        return [sum((c * v for c, v in zip(row, vector)), _zero_like()) for row in self.rows]

    def is_identity(self) -> bool:
        return self.identity_witness() is None

    def identity_witness(self) -> Optional[Witness]:
        return first_difference(self.dense(), LowerTriMatrix.identity(self.n).dense())

    def difference(self, other: "LowerTriMatrix") -> Optional[Witness]:
        return first_difference(self.dense(), other.dense())

    def render(self, variable: str = "u") -> str:
        return _render_rows(self.rows, variable)

    def to_json(self, variable: str = "u") -> dict:
        return {"n": self.n, "rows": [[render(c, variable) for c in row] for row in self.rows]}


@dataclass(frozen=True)
class ProductionMatrix:
    """Dense n x n lower-Hessenberg matrix (zero strictly above the superdiagonal)."""

    rows: Tuple[Row, ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("production matrix rows must be square")
            for j in range(i + 2, n):
                if not is_zero(row[j]):
                    raise ValueError(f"entry ({i},{j}) lies above the superdiagonal")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ProductionMatrix":
        return cls(tuple(tuple(to_coefficient(c) for c in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Coefficient:
        return self.rows[i][j]

    def bandwidth(self) -> int:
        """Number of nonzero diagonals at or below the superdiagonal."""
        lowest = -1
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if not is_zero(c):
                    lowest = max(lowest, i - j)
        return lowest + 2

    def is_tridiagonal(self) -> bool:
        return self.bandwidth() <= 3

    def difference(self, other: "ProductionMatrix") -> Optional[Witness]:
        return first_difference(self.rows, other.rows)

    def render(self, variable: str = "u") -> str:
        return _render_rows(self.rows, variable)

    def to_json(self, variable: str = "u") -> dict:
        return {"n": self.n, "rows": [[render(c, variable) for c in row] for row in self.rows]}


def matrix_inverse(m: LowerTriMatrix) -> LowerTriMatrix:
    """Exact inverse by forward substitution; every diagonal entry must be a unit."""
    n = m.n
    inverse_diag = []
    for i in range(n):
        d = m.rows[i][i]
        if not is_unit(d):
            raise SingularMatrix(f"diagonal entry ({i},{i}) = {render(d)} is not a unit")
        inverse_diag.append(unit_inverse(d))
    x: List[List[Coefficient]] = []
    for i in range(n):
        row: List[Coefficient] = []
        for j in range(i):
            total = _zero_like()
            for k in range(j, i):
                lik = m.rows[i][k]
                if not is_zero(lik):
                    xkj = x[k][j]
                    if not is_zero(xkj):
                        total = total + lik * xkj
            row.append(-total * inverse_diag[i])
        row.append(inverse_diag[i])
        x.append(row)
    return LowerTriMatrix(tuple(tuple(r) for r in x))


def coefficient_array(polys: Sequence[Coefficient], n: Optional[int] = None) -> LowerTriMatrix:
    """Row r holds the coefficients of u^0..u^r in polys[r]."""
    n = len(polys) if n is None else n
    rows = []
    for r in range(n):
        p = polys[r]
        p = p if isinstance(p, Poly) else Poly((p,))
        if p.degree > r:
            raise ValueError(f"polynomial {r} has degree {p.degree} > {r}")
        rows.append([p.coefficient(k) for k in range(r + 1)])
    return LowerTriMatrix.from_rows(rows)
