"""Brute-force ground truth over all bases and checks of solver output against it."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Protocol

import networkx as nx

from .geometry import (
    ONE,
    ZERO,
    BiCost,
    EventSchedule,
    FrontierLabel,
    Point2,
    Slope,
    WeightInterval,
    build_event_schedule,
    classify_frontier,
    critical_pairs,
    slope_between,
    weight_interval,
)
from .matroids import (
    DEFAULT_ENUMERATION_CAP,
    Basis,
    MatroidInstance,
    as_basis,
    enumerate_bases,
)
from .results import VisitedBasis

logger = logging.getLogger(__name__)


@dataclass
class FrontierTruth:
    bases: list[Basis]
    images: dict[Basis, Point2]
    labels: dict[Point2, FrontierLabel]
    y_n: frozenset[Point2]
    y_sn: frozenset[Point2]
    y_esn: frozenset[Point2]
    x_e: frozenset[Basis]
    x_se: frozenset[Basis]
    x_ese: frozenset[Basis]
    weight_components: dict[Basis, WeightInterval]
    events: EventSchedule
    probes: list[Fraction] = field(default_factory=list)

    @property
    def all_images(self) -> list[Point2]:
        return [self.images[basis] for basis in self.bases]


@dataclass
class AdjacencyGraph:
    nodes: list[Basis]
    edges: list[tuple[Basis, Basis]]
    graph: nx.Graph


def weight_probes(lambdas: Iterable[Fraction]) -> list[Fraction]:
    """Event weights in ``(0, 1)`` plus the midpoints around and between them."""

    inner = sorted({lam for lam in lambdas if ZERO < lam < ONE})
    cuts = [ZERO, *inner, ONE]
    midpoints = [WeightInterval(a, b).midpoint for a, b in zip(cuts, cuts[1:])]
    return sorted({*inner, *midpoints})


def _optimal(images: dict[Basis, Point2], lam: Fraction) -> list[Basis]:
    best = min(image.weighted(lam) for image in images.values())
    return [basis for basis, image in images.items() if image.weighted(lam) == best]


def optimal_bases(
    bases: Sequence[Basis], costs: BiCost, lam: Fraction
) -> list[Basis]:
    """``X_lam``: every basis minimising ``lam*f1 + (1-lam)*f2``."""

    return _optimal({as_basis(basis): costs.image(basis) for basis in bases}, lam)


def _support_interval(image: Point2, distinct: Iterable[Point2]) -> WeightInterval:
    alpha_down = Slope.neg_inf()
    alpha_up = Slope.zero()
    for other in distinct:
        if other.y1 < image.y1:
            alpha_down = max(alpha_down, slope_between(image, other))
        elif other.y1 > image.y1:
            alpha_up = min(alpha_up, slope_between(image, other))
    return weight_interval(alpha_up, alpha_down)


def brute_force_frontiers(
    instance: MatroidInstance, costs: BiCost, cap: int = DEFAULT_ENUMERATION_CAP
) -> FrontierTruth:
    bases = enumerate_bases(instance, cap)
    images = {basis: costs.image(basis) for basis in bases}
    labels = classify_frontier(list(images.values()))
    y_n = frozenset(
        p for p, label in labels.items() if label is not FrontierLabel.DOMINATED
    )
    y_sn = frozenset(
        p
        for p, label in labels.items()
        if label in (FrontierLabel.EXTREME, FrontierLabel.SUPPORTED)
    )
    y_esn = frozenset(
        p for p, label in labels.items() if label is FrontierLabel.EXTREME
    )
    events = build_event_schedule(critical_pairs(costs, instance.elements()))
    probes = weight_probes(events.lambdas)
    supported: set[Basis] = set()
    for lam in probes:
        supported.update(_optimal(images, lam))
    distinct = set(images.values())
    components: dict[Point2, WeightInterval] = {}
    weight_components: dict[Basis, WeightInterval] = {}
    for basis in sorted(supported):
        image = images[basis]
        if image not in components:
            components[image] = _support_interval(image, distinct)
        weight_components[basis] = components[image]
    logger.debug(
        "Oracle: %d bases, %d distinct images, %d extreme-supported points",
        len(bases),
        len(distinct),
        len(y_esn),
    )
    return FrontierTruth(
        bases=bases,
        images=images,
        labels=labels,
        y_n=y_n,
        y_sn=y_sn,
        y_esn=y_esn,
        x_e=frozenset(b for b in bases if images[b] in y_n),
        x_se=frozenset(supported),
        x_ese=frozenset(b for b in supported if images[b] in y_esn),
        weight_components=weight_components,
        events=events,
        probes=probes,
    )


def adjacency_graph(bases: Sequence[Basis]) -> AdjacencyGraph:
    """Bases are adjacent when they differ in exactly one element."""

    nodes = [as_basis(basis) for basis in bases]
    index = set(nodes)
    universe = sorted({e for basis in nodes for e in basis})
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    edges: list[tuple[Basis, Basis]] = []
    for basis in nodes:
        members = set(basis)
        for e in basis:
            rest = members - {e}
            for f in universe:
                if f in members:
                    continue
                neighbor = as_basis(rest | {f})
                if neighbor in index and basis < neighbor:
                    edges.append((basis, neighbor))
    graph.add_edges_from(edges)
    return AdjacencyGraph(nodes=nodes, edges=edges, graph=graph)


def check_connectivity(graph: AdjacencyGraph, subset: Iterable[Basis]) -> bool:
    """Whether ``subset`` induces a connected subgraph (empty and single count)."""

    members = [as_basis(basis) for basis in subset]
    if len(set(members)) <= 1:
        return True
    return bool(nx.is_connected(graph.graph.subgraph(members)))


def check_weight_connectivity(
    truth: FrontierTruth, graph: AdjacencyGraph
) -> dict[Fraction, bool]:
    """Connectivity of ``D[X_lam]`` at every event weight."""

    return {
        lam: check_connectivity(graph, _optimal(truth.images, lam))
        for lam in truth.events.lambdas
    }


class ViolationKind(str, Enum):
    NOT_SUPPORTED = "not-supported"
    EXTREME_MISMATCH = "extreme-mismatch"
    INTERVAL_MISMATCH = "interval-mismatch"
    NOT_ADJACENT = "not-adjacent"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message}"


class VisitLog(Protocol):
    @property
    def visited(self) -> list[VisitedBasis]: ...

    claims_adjacency: bool


def verify_sweep(result: VisitLog, truth: FrontierTruth) -> list[Violation]:
    """Compare a sweep (or frontier report) with the oracle; empty means valid."""

    violations: list[Violation] = []
    visited = result.visited
    for visit in visited:
        if visit.basis not in truth.x_se:
            violations.append(
                Violation(
                    ViolationKind.NOT_SUPPORTED,
                    f"basis {list(visit.basis)} with image {visit.image} "
                    "is not supported efficient",
                )
            )
            continue
        expected = truth.weight_components[visit.basis]
        if visit.interval != expected:
            violations.append(
                Violation(
                    ViolationKind.INTERVAL_MISMATCH,
                    f"basis {list(visit.basis)} reports {visit.interval}, "
                    f"oracle has {expected}",
                )
            )
    extreme = {visit.image for visit in visited if visit.extreme}
    if extreme != truth.y_esn:
        missing = sorted(truth.y_esn - extreme)
        extra = sorted(extreme - truth.y_esn)
        violations.append(
            Violation(
                ViolationKind.EXTREME_MISMATCH,
                f"missing {[str(p) for p in missing]}, extra {[str(p) for p in extra]}",
            )
        )
    if result.claims_adjacency:
        for before, after in zip(visited, visited[1:]):
            if len(set(before.basis) - set(after.basis)) != 1:
                violations.append(
                    Violation(
                        ViolationKind.NOT_ADJACENT,
                        f"{list(before.basis)} -> {list(after.basis)} "
                        "is not a single swap",
                    )
                )
    return violations
