"""Agent persisting reports and benchmark tables to disk."""

from __future__ import annotations

import logging
from pathlib import Path

import pandas as pd

from core.geometry import format_rational
from core.models import (
    BENCHMARK_COLUMNS,
    DecompositionEntry,
    OracleReport,
    RunReport,
    RunStats,
    Settings,
)

from .solver_agent import SolverOutcome

logger = logging.getLogger(__name__)


class ReportAgent:
    """Write JSON reports and CSV tables and collect their paths."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings
        self.settings.resolve_paths()

    def save_report(
        self, report: RunReport | OracleReport, path: Path | None = None
    ) -> Path:
        """Persist a run or oracle report as sorted, indented JSON."""

        if path is None:
            stem = report.solver if isinstance(report, RunReport) else "oracle"
            name = f"{stem}_{report.instance_digest[:12]}.json"
            path = self.settings.output_dir / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.to_json(), encoding="utf-8")
        logger.info("Wrote report %s", path)
        return path

    def save_table(self, table: pd.DataFrame, path: Path | None = None) -> Path:
        """Persist a benchmark table with the stable column order."""

        path = path or self.settings.output_dir / "benchmark.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(path, index=False, columns=BENCHMARK_COLUMNS)
        logger.info("Wrote benchmark table %s (%d rows)", path, len(table))
        return path

    @staticmethod
    def to_run_report(
        outcome: SolverOutcome,
        instance_digest: str,
        timing: bool = False,
        violations: list[str] | None = None,
    ) -> RunReport:
        """Assemble the machine-readable report; points run by ascending ``y1``."""

        frontier = outcome.frontier
        points = list(reversed(frontier.esn_points))
        representatives = list(reversed(frontier.representatives))
        decomposition = [
            DecompositionEntry(
                lo=format_rational(interval.lo),
                hi=format_rational(interval.hi),
                point=point.as_strings(),
            )
            for interval, point in frontier.weight_decomposition
        ]
        return RunReport(
            solver=outcome.solver.value,
            instance_digest=instance_digest,
            esn_points=[point.as_strings() for point in points],
            representatives=[list(basis) for basis in representatives],
            weight_decomposition=decomposition,
            stats=RunStats(
                iterations=frontier.stats.iterations,
                independence_tests=frontier.stats.independence_tests,
                wall_time_s=round(outcome.wall_time_s, 6) if timing else None,
            ),
            verified=violations is not None,
            violations=violations or [],
        )
