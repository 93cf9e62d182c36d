"""Runs registered checks and collects a deterministic report."""
import time
from typing import Optional

from ..schemas.payloads import CheckResult, VerificationReport
from ..utils.exceptions import CheckFailed, RiordanError
from ..utils.logger import verify_logger
from . import checks  # noqa: F401  registers the suite
from .registry import Check, all_checks


def run_check(entry: Check) -> CheckResult:
    """Run one check; failures become results, never exceptions."""
    started = time.perf_counter()
    try:
        entry.run()
    except CheckFailed as e:
        verify_logger.info(f"{entry.check_id} failed: {e}")
        return CheckResult(check_id=entry.check_id, description=entry.description, passed=False, detail=str(e))
    except RiordanError as e:
        verify_logger.warning(f"{entry.check_id} raised {type(e).__name__}: {e}")
        detail = f"{type(e).__name__}: {e}"
        return CheckResult(check_id=entry.check_id, description=entry.description, passed=False, detail=detail)
    except Exception as e:
        verify_logger.error(f"{entry.check_id} crashed: {e}", exc_info=True)
        detail = f"unexpected {type(e).__name__}: {e}"
        return CheckResult(check_id=entry.check_id, description=entry.description, passed=False, detail=detail)
    verify_logger.debug(f"{entry.check_id} passed in {time.perf_counter() - started:.3f}s")
    return CheckResult(check_id=entry.check_id, description=entry.description, passed=True)


def run_all(prefix: Optional[str] = None) -> VerificationReport:
    """Run every registered check whose id starts with ``prefix``, in id order."""
    selected = all_checks(prefix)
    verify_logger.info(f"Running {len(selected)} checks" + (f" matching {prefix!r}" if prefix else ""))
    report = VerificationReport(results=[run_check(entry) for entry in selected])
    verify_logger.info(f"{report.passed} passed, {report.failed} failed")
    return report
