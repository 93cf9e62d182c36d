"""Pydantic schemas for CLI and verification output.

Exact values always travel as strings ("p/q" or "c0 + c1*u"), never floats.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, RootModel, field_validator

from ..algebra.coeffring import Coefficient, render
from ..algebra.jfrac import JFraction
from ..algebra.matrices import LowerTriMatrix, ProductionMatrix, Witness
from ..algebra.riordan import InvolutionResult, RiordanPair


class SequencePayload(RootModel[List[str]]):
    """A finite sequence of exact values; serializes as a bare JSON array."""
    root: List[str] = Field(..., description="Exact values a_0, a_1, ...")

    @classmethod
    def from_values(cls, values: List[Coefficient], variable: str = "u") -> "SequencePayload":
        return cls([render(v, variable) for v in values])


class MatrixPayload(BaseModel):
    """Dense matrix rows; lower-triangular rows are ragged."""
    n: int = Field(..., ge=0, description="Matrix size")
    rows: List[List[str]] = Field(..., description="Row-major exact entries")

    @field_validator("rows")
    @classmethod
    def rows_fit_size(cls, rows, info):
        n = info.data.get("n")
        if n is not None and len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        return rows

    @classmethod
    def from_matrix(cls, matrix, variable: str = "u") -> "MatrixPayload":
        if isinstance(matrix, (LowerTriMatrix, ProductionMatrix)):
            return cls(**matrix.to_json(variable))
        raise TypeError(f"cannot serialize {type(matrix).__name__}")


class TailPayload(BaseModel):
    alpha: str
    beta: str


class JFractionPayload(BaseModel):
    """Jacobi continued fraction with an optional repeating tail."""
    mu0: str
    alphas: List[str]
    betas: List[str]
    tail: Optional[TailPayload] = None

    @classmethod
    def from_jfraction(cls, j: JFraction, variable: str = "u") -> "JFractionPayload":
        return cls(**j.to_json(variable))


class PairPayload(BaseModel):
    """A Riordan pair as truncated coefficient lists."""
    order: int = Field(..., ge=1)
    g: List[str]
    f: List[str]

    @classmethod
    def from_pair(cls, pair: RiordanPair, variable: str = "u") -> "PairPayload":
        return cls(order=pair.order, g=pair.g.to_json(variable), f=pair.f.to_json(variable))


class WitnessPayload(BaseModel):
    row: int
    col: int
    got: str
    expected: str

    @classmethod
    def from_witness(cls, witness: Witness) -> "WitnessPayload":
        row, col, got, expected = witness
        return cls(row=row, col=col, got=render(got), expected=render(expected))


class InvolutionReport(BaseModel):
    """Outcome of an involution check."""
    subject: str
    n: int
    holds: bool
    witness: Optional[WitnessPayload] = None

    @classmethod
    def from_result(cls, subject: str, result: InvolutionResult) -> "InvolutionReport":
        witness = WitnessPayload.from_witness(result.witness) if result.witness else None
        return cls(subject=subject, n=result.n, holds=result.holds, witness=witness)


class FamilyPayload(BaseModel):
    """A named construction and its matrix."""
    name: str
    matrix: MatrixPayload
    involution: Optional[bool] = None


class CheckResult(BaseModel):
    """One entry of the reproduction suite."""
    check_id: str = Field(..., description="Stable identifier; reports sort on it")
    description: str
    passed: bool
    detail: str = Field("", description="First witness or failure message")


class VerificationReport(BaseModel):
    """Deterministic report of the reproduction suite."""
    results: List[CheckResult]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def first_failure(self) -> Optional[CheckResult]:
        return next((r for r in self.results if not r.passed), None)

    def lines(self) -> List[str]:
        out = [f"{'PASS' if r.passed else 'FAIL'} {r.check_id}: {r.description}" for r in self.results]
        out.append(f"{self.passed} passed, {self.failed} failed")
        return out

    def sorted(self) -> "VerificationReport":
        return VerificationReport(results=sorted(self.results, key=lambda r: r.check_id))


def witness_text(witness: Optional[Tuple]) -> str:
    if witness is None:
        return ""
    row, col, got, expected = witness
    return f"({row},{col}): got {render(got)}, expected {render(expected)}"
