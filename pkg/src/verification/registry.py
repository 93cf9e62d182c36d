"""Check registry and the assertion helpers checks are written with."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from ..algebra.coeffring import Coefficient, render, render_all, to_coefficient
from ..algebra.matrices import LowerTriMatrix, ProductionMatrix
from ..algebra.riordan import RiordanPair, involution_check
from ..schemas.payloads import witness_text
from ..utils.exceptions import CheckFailed


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    run: Callable[[], None]


REGISTRY: Dict[str, Check] = {}


def register(check_id: str, description: str, run: Callable[[], None]) -> Check:
    if check_id in REGISTRY:
        raise ValueError(f"duplicate check id: {check_id}")
    entry = Check(check_id, description, run)
    REGISTRY[check_id] = entry
    return entry


def check(check_id: str, description: str):
    """Decorator form of ``register``."""

    def decorator(fn: Callable[[], None]) -> Callable[[], None]:
        register(check_id, description, fn)
        return fn

    return decorator


def all_checks(prefix: Optional[str] = None) -> List[Check]:
    checks = sorted(REGISTRY.values(), key=lambda c: c.check_id)
    if prefix:
        checks = [c for c in checks if c.check_id.startswith(prefix)]
    return checks


# -- assertion helpers ------------------------------------------------------------


def expect_matrix(got: LowerTriMatrix, rows: Sequence[Sequence], label: str = "matrix") -> None:
    expected = LowerTriMatrix.from_rows(rows)
    if got.n != expected.n:
        raise CheckFailed(f"{label}: size {got.n}, expected {expected.n}")
    witness = got.difference(expected)
    if witness is not None:
        raise CheckFailed(f"{label} {witness_text(witness)}")


def expect_production(got: ProductionMatrix, rows: Sequence[Sequence], label: str = "production matrix") -> None:
    witness = got.difference(ProductionMatrix.from_rows(rows))
    if witness is not None:
        raise CheckFailed(f"{label} {witness_text(witness)}")


def expect_same_matrix(got: LowerTriMatrix, expected: LowerTriMatrix, label: str = "routes") -> None:
    witness = got.difference(expected)
    if witness is not None:
        raise CheckFailed(f"{label} differ at {witness_text(witness)}")


def expect_sequence(got: Sequence[Coefficient], expected: Sequence, label: str = "sequence") -> None:
    expected = [to_coefficient(v) for v in expected]
    if len(got) < len(expected):
        raise CheckFailed(f"{label}: only {len(got)} terms, expected {len(expected)}")
    for i, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            raise CheckFailed(f"{label}: term {i} is {render(a)}, expected {render(b)}")


def expect_equal(got, expected, label: str) -> None:
    if got != expected:
        shown_got = render_all(got) if isinstance(got, (list, tuple)) else got
        shown_expected = render_all(expected) if isinstance(expected, (list, tuple)) else expected
        raise CheckFailed(f"{label}: got {shown_got}, expected {shown_expected}")


def expect_involution(r: RiordanPair, n: int, label: str = "involution") -> None:
    result = involution_check(r, n)
    if not result.holds:
        raise CheckFailed(f"{label}: square departs from I at {witness_text(result.witness)}")
