"""JSON payloads emitted by the command line and the verification suite."""
from .payloads import (
    CheckResult,
    FamilyPayload,
    InvolutionReport,
    JFractionPayload,
    MatrixPayload,
    PairPayload,
    SequencePayload,
    VerificationReport,
)

__all__ = [
    "CheckResult",
    "FamilyPayload",
    "InvolutionReport",
    "JFractionPayload",
    "MatrixPayload",
    "PairPayload",
    "SequencePayload",
    "VerificationReport",
]
