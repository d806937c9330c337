"""Exact bi-objective geometry: costs, slopes, the weight/slope duality, events and
frontier classification.

Every numeric value is a :class:`fractions.Fraction`; nothing in this module touches
floating point.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import NamedTuple

from .errors import InputError, SolverLogicError, UndefinedSlopeError

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(value: object) -> Fraction:
    """Read an integer or a ``"p/q"`` string as an exact rational."""

    if isinstance(value, bool):
        raise InputError(f"Boolean is not a rational cost: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputError(f"Costs must be integers or 'p/q' strings, got {value!r}")
    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise InputError(f"Not an integer or 'p/q' rational: {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise InputError(f"Rational with zero denominator: {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` for integers)."""

    return str(value)


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A segment slope; ``value=None`` encodes negative infinity."""

    value: Fraction | None

    @classmethod
    def finite(cls, value: Fraction | int) -> Slope:
        return cls(Fraction(value))

    @classmethod
    def neg_inf(cls) -> Slope:
        return cls(None)

    @classmethod
    def zero(cls) -> Slope:
        return cls(ZERO)

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __str__(self) -> str:
        return "-inf" if self.value is None else format_rational(self.value)


@dataclass(frozen=True, order=True)
class Point2:
    """Image ``(f1, f2)`` of a solution in objective space."""

    y1: Fraction
    y2: Fraction

    @classmethod
    def of(cls, y1: Fraction | int, y2: Fraction | int) -> Point2:
        return cls(Fraction(y1), Fraction(y2))

    def weighted(self, lam: Fraction) -> Fraction:
        return lam * self.y1 + (1 - lam) * self.y2

    def dominates(self, other: Point2) -> bool:
        return self != other and self.y1 <= other.y1 and self.y2 <= other.y2

    def as_strings(self) -> tuple[str, str]:
        return format_rational(self.y1), format_rational(self.y2)

    def __str__(self) -> str:
        return f"({format_rational(self.y1)}, {format_rational(self.y2)})"


@dataclass(frozen=True)
class BiCost:
    """Per-element cost pairs ``c(e) = (c1(e), c2(e))``."""

    c1: tuple[Fraction, ...]
    c2: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.c1) != len(self.c2):
            raise InputError("Both cost vectors must cover the same elements.")

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[int | str | Fraction, int | str | Fraction]]
    ) -> BiCost:
        parsed = [(parse_rational(a), parse_rational(b)) for a, b in pairs]
        return cls(
            c1=tuple(pair[0] for pair in parsed), c2=tuple(pair[1] for pair in parsed)
        )

    def __len__(self) -> int:
        return len(self.c1)

    def pair(self, e: int) -> tuple[Fraction, Fraction]:
        return self.c1[e], self.c2[e]

    def weighted(self, lam: Fraction, e: int) -> Fraction:
        return lam * self.c1[e] + (1 - lam) * self.c2[e]

    def image(self, elements: Iterable[int]) -> Point2:
        y1 = ZERO
        y2 = ZERO
        for e in elements:
            y1 += self.c1[e]
            y2 += self.c2[e]
        return Point2(y1, y2)


@dataclass(frozen=True)
class WeightInterval:
    """Closed weight interval ``[lo, hi]`` inside ``[0, 1]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not (ZERO <= self.lo <= ONE and ZERO <= self.hi <= ONE):
            raise InputError(f"Weight interval {self} leaves [0, 1].")
        if self.lo > self.hi:
            raise SolverLogicError(f"Inverted weight interval {self}.")

    @property
    def is_extreme(self) -> bool:
        """More than a single weight, i.e. the owner is extreme-supported."""
        return self.lo < self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, lam: Fraction) -> bool:
        return self.lo <= lam <= self.hi

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


class CriticalPair(NamedTuple):
    e: int
    f: int
    lam: Fraction


@dataclass(frozen=True)
class Event:
    lam: Fraction
    elements: frozenset[int]


@dataclass(frozen=True)
class EventSchedule:
    """Distinct crossing weights in ascending order, each with its element set."""

    events: tuple[Event, ...] = ()

    def __post_init__(self) -> None:
        for previous, current in zip(self.events, self.events[1:]):
            if previous.lam >= current.lam:
                raise SolverLogicError("Event weights must be strictly increasing.")
        if any(not event.elements for event in self.events):
            raise SolverLogicError("Every event needs at least one element.")

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    @property
    def lambdas(self) -> list[Fraction]:
        return [event.lam for event in self.events]


class FrontierLabel(str, Enum):
    DOMINATED = "dominated"
    UNSUPPORTED = "nondominated-unsupported"
    SUPPORTED = "supported-nonextreme"
    EXTREME = "extreme-supported"


def _check_weight(lam: Fraction) -> None:
    if not ZERO <= lam <= ONE:
        raise InputError(f"Weight {lam} is outside [0, 1].")


def weighted_cost(lam: Fraction, e: int, costs: BiCost) -> Fraction:
    """Return ``c_lam(e) = lam*c1(e) + (1-lam)*c2(e)``."""

    _check_weight(lam)
    return costs.weighted(lam, e)


def slope_between(y_from: Point2, y_to: Point2) -> Slope:
    """Slope of the segment from ``y_from`` to ``y_to``."""

    delta1 = y_to.y1 - y_from.y1
    if delta1 == 0:
        raise UndefinedSlopeError(
            f"Points {y_from} and {y_to} share their first objective value."
        )
    return Slope.finite((y_to.y2 - y_from.y2) / delta1)


def alpha_of_lambda(lam: Fraction) -> Slope:
    """Map a weight to the slope of the level line of ``lam*y1 + (1-lam)*y2``."""

    _check_weight(lam)
    if lam == ONE:
        return Slope.neg_inf()
    return Slope.finite(-lam / (1 - lam))


def lambda_of_alpha(alpha: Slope) -> Fraction:
    """Inverse of :func:`alpha_of_lambda` on ``(-inf, 0]``."""

    if alpha.value is None:
        return ONE
    if alpha.value > 0:
        raise InputError(f"Slope {alpha} is positive and has no weight.")
    return alpha.value / (alpha.value - 1)


def critical_pairs(
    costs: BiCost, elements: Iterable[int] | None = None
) -> list[CriticalPair]:
    """All pairs with ``c1(e) > c1(f)`` and ``c2(e) < c2(f)`` plus their crossing
    weight, sorted by ``(lam, e, f)``."""

    ids = list(range(len(costs)) if elements is None else elements)
    pairs: list[CriticalPair] = []
    for e in ids:
        c1_e, c2_e = costs.pair(e)
        for f in ids:
            c1_f, c2_f = costs.pair(f)
            if c1_e > c1_f and c2_e < c2_f:
                rise = c2_f - c2_e
                pairs.append(CriticalPair(e, f, rise / (rise + (c1_e - c1_f))))
    pairs.sort(key=lambda pair: (pair.lam, pair.e, pair.f))
    return pairs


def build_event_schedule(pairs: Iterable[CriticalPair]) -> EventSchedule:
    """Group critical pairs by crossing weight into ``E_lam`` sets."""

    grouped: dict[Fraction, set[int]] = {}
    for pair in pairs:
        grouped.setdefault(pair.lam, set()).update((pair.e, pair.f))
    return EventSchedule(
        tuple(Event(lam, frozenset(grouped[lam])) for lam in sorted(grouped))
    )


def nondominated_filter(points: Iterable[Point2]) -> frozenset[Point2]:
    """Points not dominated by any other input point; duplicates collapse."""

    ordered = sorted(set(points))
    kept: list[Point2] = []
    best_y2: Fraction | None = None
    # sorted by (y1, y2): a point survives iff its y2 beats every earlier y2
    for point in ordered:
        if best_y2 is None or point.y2 < best_y2:
            kept.append(point)
            best_y2 = point.y2
    return frozenset(kept)


def _cross(origin: Point2, a: Point2, b: Point2) -> Fraction:
    return (a.y1 - origin.y1) * (b.y2 - origin.y2) - (a.y2 - origin.y2) * (
        b.y1 - origin.y1
    )


def lower_left_chain(points: Iterable[Point2]) -> list[Point2]:
    """Vertices of the lower-left boundary of ``conv(points) + R^2_>=0``,
    ordered by ascending ``y1``."""

    chain: list[Point2] = []
    for point in sorted(nondominated_filter(points)):
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], point) <= 0:
            chain.pop()
        chain.append(point)
    return chain


def classify_frontier(points: Sequence[Point2]) -> dict[Point2, FrontierLabel]:
    """Label every distinct input point."""

    nondominated = nondominated_filter(points)
    chain = lower_left_chain(nondominated)
    vertices = set(chain)
    labels: dict[Point2, FrontierLabel] = {}
    for point in set(points):
        if point in vertices:
            labels[point] = FrontierLabel.EXTREME
        elif point not in nondominated:
            labels[point] = FrontierLabel.DOMINATED
        elif _on_chain(chain, point):
            labels[point] = FrontierLabel.SUPPORTED
        else:
            labels[point] = FrontierLabel.UNSUPPORTED
    return labels


def _on_chain(chain: Sequence[Point2], point: Point2) -> bool:
    for left, right in zip(chain, chain[1:]):
        if left.y1 < point.y1 < right.y1:
            return _cross(left, right, point) == 0
    return False


def weight_interval(alpha_up: Slope, alpha_down: Slope) -> WeightInterval:
    """``[lam(alpha_up), lam(alpha_down)]``; pass ``Slope.zero()`` /
    ``Slope.neg_inf()`` when the corresponding side has no solutions."""

    lo = lambda_of_alpha(alpha_up)
    hi = lambda_of_alpha(alpha_down)
    if lo > hi:
        raise SolverLogicError(
            f"Slope bounds {alpha_up} and {alpha_down} give an inverted interval."
        )
    return WeightInterval(lo, hi)
