"""
Verification Runner - runs the check families against one sampled experiment.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..config import ExperimentConfig
from ..errors import ConfigurationError
from ..experiment import ExperimentContext, prepare
from .checks import CheckKind, CheckResult, run_check

logger = logging.getLogger(__name__)


def resolve_checks(names: Optional[Sequence[str]]) -> List[CheckKind]:
    """
    Maps check names to CheckKind values; None or an empty list selects every family.

    Raises:
        ConfigurationError: For an unknown check name
    """
    if not names:
        return list(CheckKind)
    kinds = []
    for name in names:
        try:
            kinds.append(CheckKind(name))
        except ValueError:
            known = ", ".join(kind.value for kind in CheckKind)
            raise ConfigurationError(f"Unknown check '{name}' (known: {known})", field="checks") from None
    return kinds


@dataclass
class RunReport:
    """
    Result of a verification run.

    Attributes:
        config: Configuration the run used
        seed_used: Seed of the accepted draw
        resamples: Rejected draws before it
        x: Mode eigenvalues x_k
        results: Check results in execution order
        duration_ms: Wall time of the run
    """
    config: ExperimentConfig
    seed_used: int
    resamples: int
    x: np.ndarray
    results: List[CheckResult] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def passed(self) -> bool:
        """Informational findings never fail a run."""
        return all(r.passed for r in self.results if not r.informational)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.informational and not r.passed]

    @property
    def findings(self) -> List[CheckResult]:
        return [r for r in self.results if r.informational]

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "seed": self.config.ensemble.seed,
            "seed_used": self.seed_used,
            "resamples": self.resamples,
            "x": [float(v) for v in self.x],
            "regime": self.config.coupling.regime.value,
            "duration_ms": self.duration_ms,
            "results": [r.to_dict() for r in self.results],
        }


class VerificationRunner:
    """
    Runs the selected check families and summarizes them.

    A family that raises a library error is reported as a failure and the
    remaining families still run.
    """

    def __init__(self, config: ExperimentConfig, context: Optional[ExperimentContext] = None):
        """
        Args:
            config: Experiment configuration; config.checks selects the families
            context: Already prepared context (prepared from config if omitted)

        Raises:
            ConfigurationError: If config.checks names an unknown family
        """
        self.config = config
        self.kinds = resolve_checks(config.checks)
        self._context = context

    @property
    def context(self) -> ExperimentContext:
        if self._context is None:
            self._context = prepare(self.config)
        return self._context

    def run(self) -> RunReport:
        start_time = time.time()
        ctx = self.context
        results: List[CheckResult] = []

        for kind in self.kinds:
            logger.info(f"Running {kind.value} checks")
            family_start = time.time()
            family = run_check(kind, ctx)
            results.extend(family)
            logger.debug(f"{kind.value}: {len(family)} result(s) in {(time.time() - family_start) * 1000:.0f}ms")

        report = RunReport(
            config=self.config,
            seed_used=ctx.sample.seed,
            resamples=ctx.sample.resamples,
            x=ctx.x,
            results=results,
            duration_ms=(time.time() - start_time) * 1000,
        )
        self._print_summary(report)
        return report

    def _print_summary(self, report: RunReport) -> None:
        checked = [r for r in report.results if not r.informational]
        total = len(checked)
        passed = sum(1 for r in checked if r.passed)

        logger.info("\n" + "=" * 60)
        logger.info("VERIFICATION SUMMARY")
        logger.info("=" * 60)
        logger.info(f"Seed:     {report.config.ensemble.seed} (used {report.seed_used})")
        logger.info(f"Total:    {total}")
        logger.info(f"Passed:   {passed}")
        logger.info(f"Failed:   {total - passed}")
        logger.info(f"Findings: {len(report.findings)}")
        logger.info("=" * 60)

        for result in report.results:
            logger.info(
                f"{result.status} {result.kind.value}/{result.name}: "
                f"{result.residual:.3e} (tol {result.tolerance:.1e})"
            )
            if result.message and (result.informational or not result.passed):
                logger.info(f"   {result.message}")

        logger.info("=" * 60 + "\n")
