"""Agent comparing solvers over a seeded instance family."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import numpy as np
import pandas as pd

from core.models import BENCHMARK_COLUMNS, BenchmarkRow, InstanceFile, Settings

from .instance_agent import InstanceAgent, generator_params
from .solver_agent import SolverAgent, SolverName
from .validation_agent import ValidationAgent

logger = logging.getLogger(__name__)


class BenchmarkAgent:
    """Run every (instance, solver) job on a bounded worker pool."""

    def __init__(
        self,
        settings: Settings,
        instance_agent: InstanceAgent | None = None,
        validation_agent: ValidationAgent | None = None,
        solver_agent: SolverAgent | None = None,
    ) -> None:
        self.settings = settings
        self.instance_agent = instance_agent or InstanceAgent(settings)
        self.validation_agent = validation_agent or ValidationAgent(settings)
        self.solver_agent = solver_agent or SolverAgent(settings)

    def run(
        self,
        family: str,
        sizes: Sequence[int],
        seeds: Iterable[int],
        solvers: Sequence[SolverName | str],
        **params: Any,
    ) -> pd.DataFrame:
        """One row per (instance, solver), sorted by family, size, seed and solver.

        ``sizes`` are vertex counts for the graphic family and ground set sizes
        otherwise; ``params`` go to the generator unchanged.
        """

        names = [SolverName(solver) for solver in solvers]
        seed_list = list(seeds)
        instances: list[tuple[int, int, InstanceFile]] = []
        for size in sizes:
            for seed in seed_list:
                instances.append(
                    (size, seed, self._generate(family, size, seed, params))
                )
        jobs = [
            (size, seed, file, name) for size, seed, file in instances for name in names
        ]
        logger.info(
            "Benchmarking %d jobs on %d workers", len(jobs), self.settings.bench_workers
        )
        with ThreadPoolExecutor(max_workers=self.settings.bench_workers) as pool:
            rows = list(pool.map(lambda job: self._run_job(family, *job), jobs))
        rows.sort(key=lambda row: (row.family, row.size, row.seed, row.solver))
        return pd.DataFrame([row.dict() for row in rows], columns=BENCHMARK_COLUMNS)

    def _generate(
        self, family: str, size: int, seed: int, params: dict[str, Any]
    ) -> InstanceFile:
        size_params = dict(params)
        if family == "graphic":
            size_params["vertex_count"] = size
        else:
            size_params["ground_size"] = size
            size_params.setdefault("rank", size // 2)
        params = generator_params(seed, family, **size_params)
        return self.instance_agent.generate(params)

    def _run_job(
        self, family: str, size: int, seed: int, file: InstanceFile, solver: SolverName
    ) -> BenchmarkRow:
        instance, costs = self.validation_agent.validate(file)
        outcome = self.solver_agent.run(instance, costs, solver)
        return BenchmarkRow(
            family=family,
            size=size,
            seed=seed,
            solver=solver.value,
            m=instance.ground_size,
            rank=instance.rank,
            esn_count=len(outcome.frontier.esn_points),
            iterations=outcome.frontier.stats.iterations,
            independence_tests=outcome.frontier.stats.independence_tests,
            wall_time_s=round(outcome.wall_time_s, 6),
        )


def scaling_exponent(table: pd.DataFrame, solver: SolverName | str) -> float:
    """Log-log slope of mean independence tests against ``m`` for one solver."""

    name = SolverName(solver).value
    subset = table[table["solver"] == name]
    means = subset.groupby("m")["independence_tests"].mean()
    means = means[means > 0]
    if len(means) < 2:
        raise ValueError(f"Need at least two instance sizes to fit {name}.")
    sizes = np.log(means.index.to_numpy(dtype=float))
    slope, _ = np.polyfit(sizes, np.log(means.to_numpy(dtype=float)), 1)
    return float(slope)
