"""Slope-maximising sweeps from the lexicographic ``(f2, f1)`` optimum leftwards."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from enum import Enum

from .errors import InputError
from .geometry import BiCost, Point2, Slope, slope_between
from .greedy import greedy_basis, objective_ordering
from .matroids import Basis, CountingOracle, MatroidInstance, as_basis
from .results import SolverStats, SweepResult, assemble_sweep

logger = logging.getLogger(__name__)


class NeighborMode(str, Enum):
    """``circuit`` swaps along fundamental circuits; ``pairs`` tests every swap."""

    CIRCUIT = "circuit"
    PAIRS = "pairs"


def _swap_neighbors(
    instance: MatroidInstance,
    b: Sequence[int],
    costs: BiCost,
    mode: NeighborMode,
    leftward: bool,
) -> list[tuple[Basis, Slope]]:
    members = set(b)
    image = costs.image(members)
    c1 = costs.c1

    def improves(e: int, f: int) -> bool:
        return c1[f] < c1[e] if leftward else c1[f] > c1[e]

    found: dict[Basis, Slope] = {}
    outside = [f for f in instance.elements() if f not in members]
    if mode is NeighborMode.CIRCUIT:
        for f in outside:
            circuit = instance.fundamental_circuit(tuple(sorted(members)), f)
            for e in sorted(circuit - {f}):
                if improves(e, f):
                    neighbor = as_basis((members - {e}) | {f})
                    found[neighbor] = slope_between(image, costs.image(neighbor))
    else:
        for e in sorted(members):
            for f in outside:
                if improves(e, f) and instance.is_independent((members - {e}) | {f}):
                    neighbor = as_basis((members - {e}) | {f})
                    found[neighbor] = slope_between(image, costs.image(neighbor))
    return sorted(found.items())


def neighbors_less(
    instance: MatroidInstance,
    b: Sequence[int],
    costs: BiCost,
    mode: NeighborMode = NeighborMode.CIRCUIT,
) -> list[tuple[Basis, Slope]]:
    """Adjacent bases ``(b - e) + f`` with smaller ``f1``, each with ``s(b', b)``."""

    return _swap_neighbors(instance, b, costs, mode, leftward=True)


def neighbors_greater(
    instance: MatroidInstance,
    b: Sequence[int],
    costs: BiCost,
    mode: NeighborMode = NeighborMode.CIRCUIT,
) -> list[tuple[Basis, Slope]]:
    """Adjacent bases with larger ``f1``; their minimum slope bounds ``Lambda(b)``
    from below."""

    return _swap_neighbors(instance, b, costs, mode, leftward=False)


def _choose_step(
    candidates: Iterable[tuple[Basis, Slope]], costs: BiCost
) -> tuple[Basis, Point2, Slope]:
    """Maximum slope; ties go to the smallest ``y1``, then the smallest basis."""

    scored = [(slope, costs.image(basis), basis) for basis, slope in candidates]
    best = max(slope for slope, _, _ in scored)
    slope, image, basis = min(
        (entry for entry in scored if entry[0] == best),
        key=lambda entry: (entry[1].y1, entry[2]),
    )
    return basis, image, slope


def global_esn_sweep(all_bases: Sequence[Basis], costs: BiCost) -> SweepResult:
    """Sweep over an explicit list of every basis."""

    if not all_bases:
        raise InputError("The global sweep needs at least one basis.")
    images = {as_basis(basis): costs.image(basis) for basis in all_bases}
    current = min(images, key=lambda basis: (images[basis].y2, images[basis].y1, basis))
    path: list[tuple[Basis, Point2]] = [(current, images[current])]
    slopes: list[Slope] = []
    stats = SolverStats()
    while True:
        here = images[current]
        candidates = [
            (basis, slope_between(here, image))
            for basis, image in images.items()
            if image.y1 < here.y1
        ]
        if not candidates:
            break
        current, image, slope = _choose_step(candidates, costs)
        path.append((current, image))
        slopes.append(slope)
        stats.iterations += 1
    logger.debug("Global sweep visited %d of %d bases", len(path), len(images))
    return assemble_sweep(path, slopes, stats)


def _adjacency_walk(
    oracle: CountingOracle,
    costs: BiCost,
    start: Basis,
    start_alpha: Slope,
    mode: NeighborMode,
) -> SweepResult:
    path: list[tuple[Basis, Point2]] = [(start, costs.image(start))]
    slopes: list[Slope] = []
    stats = SolverStats()
    current = start
    while True:
        candidates = neighbors_less(oracle, current, costs, mode)
        if not candidates:
            break
        current, image, slope = _choose_step(candidates, costs)
        path.append((current, image))
        slopes.append(slope)
        stats.iterations += 1
    stats.independence_tests = oracle.tests
    logger.debug(
        "Adjacency sweep: %d iterations, %d independence tests",
        stats.iterations,
        stats.independence_tests,
    )
    return assemble_sweep(path, slopes, stats, start_alpha, claims_adjacency=True)


def adjacency_esn_sweep(
    instance: MatroidInstance,
    costs: BiCost,
    mode: NeighborMode = NeighborMode.CIRCUIT,
) -> SweepResult:
    """Sweep that only inspects adjacent bases; never enumerates all bases."""

    oracle = CountingOracle.wrap(instance)
    lex_f2 = objective_ordering(costs, first=2, elements=oracle.elements())
    start = greedy_basis(oracle, lex_f2)
    return _adjacency_walk(oracle, costs, start, Slope.zero(), mode)


def start_midway_sweep(
    instance: MatroidInstance,
    costs: BiCost,
    start: Sequence[int],
    mode: NeighborMode = NeighborMode.CIRCUIT,
) -> SweepResult:
    """Adjacency sweep from a supported efficient basis chosen by the caller.

    The first interval's lower end is the minimum slope towards larger ``f1``
    neighbours (or 0), which is exact for supported efficient starts.
    """

    oracle = CountingOracle.wrap(instance)
    basis = as_basis(start)
    if len(basis) != oracle.rank or not oracle.is_independent(basis):
        raise InputError(f"Start {basis} is not a basis of the instance.")
    start_alpha = min(
        [slope for _, slope in neighbors_greater(oracle, basis, costs, mode)]
        + [Slope.zero()]
    )
    return _adjacency_walk(oracle, costs, basis, start_alpha, mode)
