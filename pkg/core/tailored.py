"""Event-driven sweep for minimum weight bases.

Starting from the lexicographic ``(f2, f1)`` optimum, each crossing weight only
reorders the elements that cross there, so the next extreme basis is obtained by
removing those elements and re-adding them greedily in ``(c_lam, c1)`` order.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from fractions import Fraction

from .geometry import (
    ONE,
    ZERO,
    BiCost,
    EventSchedule,
    WeightInterval,
    build_event_schedule,
    critical_pairs,
)
from .greedy import greedy_basis, objective_ordering
from .matroids import Basis, CountingOracle, MatroidInstance, as_basis
from .results import FrontierReport, SolverStats

logger = logging.getLogger(__name__)


def event_schedule_for(instance: MatroidInstance, costs: BiCost) -> EventSchedule:
    return build_event_schedule(critical_pairs(costs, instance.elements()))


def tailored_trace(
    instance: MatroidInstance,
    costs: BiCost,
    schedule: EventSchedule | None = None,
) -> Iterator[tuple[Fraction, Basis]]:
    """Yield ``(0, B^0)`` and then ``(lam^k, B^k)`` after every event."""

    schedule = schedule if schedule is not None else event_schedule_for(instance, costs)
    lex_f2 = objective_ordering(costs, first=2, elements=instance.elements())
    current = list(greedy_basis(instance, lex_f2))
    yield ZERO, as_basis(current)
    for event in schedule:
        lam = event.lam
        current = [e for e in current if e not in event.elements]
        rebuild = sorted(
            event.elements, key=lambda e: (costs.weighted(lam, e), costs.c1[e], e)
        )
        for e in rebuild:
            if instance.is_independent((*current, e)):
                current.append(e)
        yield lam, as_basis(current)


def tailored_esn_sweep(instance: MatroidInstance, costs: BiCost) -> FrontierReport:
    """One representative per extreme-supported point plus the weight set
    decomposition, in ``O(m^2)`` independence tests."""

    oracle = CountingOracle.wrap(instance)
    schedule = event_schedule_for(oracle, costs)
    trace = list(tailored_trace(oracle, costs, schedule))
    stats = SolverStats(iterations=len(schedule))
    entries = []
    for k, (lam, basis) in enumerate(trace):
        upper = trace[k + 1][0] if k + 1 < len(trace) else ONE
        entries.append((basis, costs.image(basis), WeightInterval(lam, upper)))
    stats.independence_tests = oracle.tests
    logger.debug(
        "Tailored sweep: %d events, %d independence tests",
        stats.iterations,
        stats.independence_tests,
    )
    return FrontierReport.from_chain(entries, stats)
