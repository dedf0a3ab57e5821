"""
Verification suite: algebraic, spectral, flow, Dyson and entropy checks with their oracles.
"""
from .checks import CHECKS, CheckKind, CheckResult, run_check
from .runner import RunReport, VerificationRunner, resolve_checks

__all__ = [
    "CheckKind",
    "CheckResult",
    "CHECKS",
    "run_check",
    "RunReport",
    "VerificationRunner",
    "resolve_checks",
]
