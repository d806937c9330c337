"""Agent running one frontier solver on a validated instance."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from enum import Enum

from core.dichotomic import dichotomic_search
from core.geometry import BiCost
from core.matroids import CountingOracle, MatroidInstance, enumerate_bases
from core.models import Settings
from core.results import FrontierReport, SweepResult
from core.sweeps import adjacency_esn_sweep, global_esn_sweep
from core.tailored import tailored_esn_sweep

logger = logging.getLogger(__name__)


class SolverName(str, Enum):
    GLOBAL = "global"
    ADJACENCY = "adjacency"
    TAILORED = "tailored"
    DICHOTOMIC = "dichotomic"


@dataclass
class SolverOutcome:
    """Extreme frontier of a run plus the full sweep, when the solver sweeps."""

    solver: SolverName
    frontier: FrontierReport
    sweep: SweepResult | None
    wall_time_s: float


class SolverAgent:
    """Dispatch to the requested solver and time it."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    def run(
        self, instance: MatroidInstance, costs: BiCost, solver: SolverName | str
    ) -> SolverOutcome:
        """Solve ``instance``; the global sweep enumerates up to the configured cap."""

        name = SolverName(solver)
        started = time.perf_counter()
        sweep: SweepResult | None = None
        if name is SolverName.GLOBAL:
            oracle = CountingOracle.wrap(instance)
            sweep = global_esn_sweep(
                enumerate_bases(oracle, self.settings.enumeration_cap), costs
            )
            sweep.stats.independence_tests = oracle.tests
            frontier = FrontierReport.from_sweep(sweep)
        elif name is SolverName.ADJACENCY:
            sweep = adjacency_esn_sweep(instance, costs)
            frontier = FrontierReport.from_sweep(sweep)
        elif name is SolverName.TAILORED:
            frontier = tailored_esn_sweep(instance, costs)
        else:
            frontier = dichotomic_search(instance, costs)
        elapsed = time.perf_counter() - started
        logger.info(
            "%s solver: %d extreme points, %d iterations, %d independence tests",
            name.value,
            len(frontier.esn_points),
            frontier.stats.iterations,
            frontier.stats.independence_tests,
        )
        return SolverOutcome(
            solver=name, frontier=frontier, sweep=sweep, wall_time_s=elapsed
        )
