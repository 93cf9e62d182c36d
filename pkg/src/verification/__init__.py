from .registry import REGISTRY, Check, all_checks
from .runner import run_all, run_check

__all__ = ["REGISTRY", "Check", "all_checks", "run_all", "run_check"]
