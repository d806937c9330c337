"""Dichotomic search baseline.

Between two known extreme images the weighted-sum problem is solved at the weight
whose level lines are parallel to the connecting segment; a strictly better image
splits the segment, otherwise the segment is a face of the frontier.
"""

from __future__ import annotations

import logging

from .geometry import (
    ONE,
    ZERO,
    BiCost,
    Point2,
    WeightInterval,
    lambda_of_alpha,
    slope_between,
)
from .greedy import Tiebreak, greedy_basis, lex_ordering, objective_ordering
from .matroids import Basis, CountingOracle, MatroidInstance
from .results import FrontierReport, SolverStats

logger = logging.getLogger(__name__)


def dichotomic_search(instance: MatroidInstance, costs: BiCost) -> FrontierReport:
    oracle = CountingOracle.wrap(instance)
    elements = oracle.elements()
    stats = SolverStats()

    def solve(ordering: tuple[int, ...]) -> tuple[Basis, Point2]:
        stats.iterations += 1
        basis = greedy_basis(oracle, ordering)
        return basis, costs.image(basis)

    right = solve(objective_ordering(costs, first=2, elements=elements))
    left = solve(objective_ordering(costs, first=1, elements=elements))
    if left[1] == right[1]:
        stats.independence_tests = oracle.tests
        return FrontierReport(
            esn_points=[right[1]],
            representatives=[right[0]],
            weight_decomposition=[(WeightInterval(ZERO, ONE), right[1])],
            stats=stats,
        )

    # frontier in descending y1, i.e. ascending weight
    frontier: list[tuple[Basis, Point2]] = [right]

    def split(high: tuple[Basis, Point2], low: tuple[Basis, Point2]) -> None:
        lam = lambda_of_alpha(slope_between(high[1], low[1]))
        probe = solve(lex_ordering(costs, lam, Tiebreak.C1_ASCENDING, elements))
        if probe[1].weighted(lam) < high[1].weighted(lam):
            split(high, probe)
            split(probe, low)
        else:
            frontier.append(low)

    split(right, left)
    decomposition: list[tuple[WeightInterval, Point2]] = []
    lower = ZERO
    for k, (_, image) in enumerate(frontier):
        if k + 1 < len(frontier):
            upper = lambda_of_alpha(slope_between(image, frontier[k + 1][1]))
        else:
            upper = ONE
        decomposition.append((WeightInterval(lower, upper), image))
        lower = upper
    stats.independence_tests = oracle.tests
    logger.debug(
        "Dichotomic search: %d probes, %d extreme points",
        stats.iterations,
        len(frontier),
    )
    return FrontierReport(
        esn_points=[image for _, image in frontier],
        representatives=[basis for basis, _ in frontier],
        weight_decomposition=decomposition,
        stats=stats,
    )
