"""Pipeline planner orchestrating the agent sequence."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import IO, Any

import pandas as pd

from core.models import GeneratorParams, InstanceFile, OracleReport, RunReport, Settings

from .benchmark_agent import BenchmarkAgent
from .instance_agent import InstanceAgent
from .report_agent import ReportAgent
from .solver_agent import SolverAgent, SolverName
from .validation_agent import ValidationAgent
from .verification_agent import VerificationAgent

logger = logging.getLogger(__name__)


class Planner:
    """Coordinates the instance, validation, solver, verification and report agents."""

    def __init__(
        self,
        settings: Settings,
        instance_agent: InstanceAgent | None = None,
        validation_agent: ValidationAgent | None = None,
        solver_agent: SolverAgent | None = None,
        verification_agent: VerificationAgent | None = None,
        benchmark_agent: BenchmarkAgent | None = None,
        report_agent: ReportAgent | None = None,
    ) -> None:
        self.settings = settings
        self.instance_agent = instance_agent or InstanceAgent(settings)
        self.validation_agent = validation_agent or ValidationAgent(settings)
        self.solver_agent = solver_agent or SolverAgent(settings)
        self.verification_agent = verification_agent or VerificationAgent(settings)
        self.benchmark_agent = benchmark_agent or BenchmarkAgent(
            settings, self.instance_agent, self.validation_agent, self.solver_agent
        )
        self.report_agent = report_agent or ReportAgent(settings)

    def solve(
        self,
        source: Path | IO[str],
        solver: SolverName | str,
        verify: bool = False,
        timing: bool = False,
        out: Path | None = None,
    ) -> tuple[RunReport, Path]:
        """Load, validate, solve and persist; violations stay in the report."""

        instance_file = self.instance_agent.load(source)
        instance, costs = self.validation_agent.validate(instance_file)
        outcome = self.solver_agent.run(instance, costs, solver)
        violations = (
            self.verification_agent.verify(instance, costs, outcome) if verify else None
        )
        report = ReportAgent.to_run_report(
            outcome, instance_file.digest(), timing=timing, violations=violations
        )
        return report, self.report_agent.save_report(report, out)

    def generate(
        self, params: GeneratorParams, out: Path | None = None
    ) -> tuple[InstanceFile, Path]:
        instance_file = self.instance_agent.generate(params)
        # reject anything the solvers could not load back
        self.validation_agent.validate(instance_file)
        return instance_file, self.instance_agent.save(instance_file, out)

    def bench(
        self,
        family: str,
        sizes: Sequence[int],
        seeds: Iterable[int],
        solvers: Sequence[SolverName | str],
        csv: Path | None = None,
        **params: Any,
    ) -> tuple[pd.DataFrame, Path]:
        table = self.benchmark_agent.run(family, sizes, seeds, solvers, **params)
        return table, self.report_agent.save_table(table, csv)

    def oracle(
        self, source: Path | IO[str], out: Path | None = None
    ) -> tuple[OracleReport, Path]:
        """Brute-force summary of an instance file."""

        instance_file = self.instance_agent.load(source)
        instance, costs = self.validation_agent.validate(instance_file)
        report = self.verification_agent.report(instance, costs, instance_file.digest())
        logger.info(
            "Oracle: %d bases, %d extreme-supported points",
            report.basis_count,
            len(report.y_esn),
        )
        return report, self.report_agent.save_report(report, out)
