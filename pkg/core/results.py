"""Result containers shared by the frontier solvers."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import Point2, Slope, WeightInterval, lambda_of_alpha, weight_interval
from .matroids import Basis


@dataclass
class SolverStats:
    iterations: int = 0
    independence_tests: int = 0


@dataclass(frozen=True)
class VisitedBasis:
    basis: Basis
    image: Point2
    interval: WeightInterval

    @property
    def extreme(self) -> bool:
        return self.interval.is_extreme


@dataclass
class SweepResult:
    """Bases visited by a sweep, in visiting order (``y1`` strictly decreasing)."""

    visited: list[VisitedBasis]
    breakpoints: list[Fraction]
    stats: SolverStats = field(default_factory=SolverStats)
    claims_adjacency: bool = False

    def extreme_images(self) -> set[Point2]:
        return {visit.image for visit in self.visited if visit.extreme}


def assemble_sweep(
    path: Sequence[tuple[Basis, Point2]],
    slopes: Sequence[Slope],
    stats: SolverStats,
    start_alpha: Slope | None = None,
    claims_adjacency: bool = False,
) -> SweepResult:
    """Turn a visiting sequence and its step slopes into a :class:`SweepResult`.

    ``slopes[k]`` is the slope of the step from ``path[k]`` to ``path[k + 1]``.
    """

    visited: list[VisitedBasis] = []
    for k, (basis, image) in enumerate(path):
        alpha_up = (start_alpha or Slope.zero()) if k == 0 else slopes[k - 1]
        alpha_down = slopes[k] if k < len(slopes) else Slope.neg_inf()
        interval = weight_interval(alpha_up, alpha_down)
        visited.append(VisitedBasis(basis, image, interval))
    return SweepResult(
        visited=visited,
        breakpoints=[lambda_of_alpha(slope) for slope in slopes],
        stats=stats,
        claims_adjacency=claims_adjacency,
    )


@dataclass
class FrontierReport:
    """One representative basis per extreme-supported point, ordered by
    descending ``y1`` (ascending weight)."""

    esn_points: list[Point2]
    representatives: list[Basis]
    weight_decomposition: list[tuple[WeightInterval, Point2]]
    stats: SolverStats = field(default_factory=SolverStats)
    claims_adjacency = False

    @classmethod
    def from_chain(
        cls,
        entries: Iterable[tuple[Basis, Point2, WeightInterval]],
        stats: SolverStats,
    ) -> FrontierReport:
        """Merge consecutive entries with equal images, then drop single weights.

        The first basis found for an image stays its representative.
        """

        merged: list[tuple[Basis, Point2, WeightInterval]] = []
        for basis, image, interval in entries:
            if merged and merged[-1][1] == image:
                first_basis, _, first_interval = merged[-1]
                merged[-1] = (
                    first_basis,
                    image,
                    WeightInterval(
                        first_interval.lo, max(first_interval.hi, interval.hi)
                    ),
                )
            else:
                merged.append((basis, image, interval))
        kept = [entry for entry in merged if entry[2].is_extreme]
        return cls(
            esn_points=[image for _, image, _ in kept],
            representatives=[basis for basis, _, _ in kept],
            weight_decomposition=[(interval, image) for _, image, interval in kept],
            stats=stats,
        )

    @classmethod
    def from_sweep(cls, result: SweepResult) -> FrontierReport:
        return cls.from_chain(
            ((visit.basis, visit.image, visit.interval) for visit in result.visited),
            result.stats,
        )

    @property
    def visited(self) -> list[VisitedBasis]:
        return [
            VisitedBasis(basis, image, interval)
            for basis, (interval, image) in zip(
                self.representatives, self.weight_decomposition
            )
        ]

    def extreme_images(self) -> set[Point2]:
        return set(self.esn_points)
