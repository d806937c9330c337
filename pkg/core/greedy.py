"""Element orderings and the Greedy algorithm."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from enum import Enum
from fractions import Fraction

from .errors import InputError
from .geometry import BiCost, weighted_cost
from .matroids import Basis, MatroidInstance, as_basis

Ordering = tuple[int, ...]


class Tiebreak(str, Enum):
    """How equal ``c_lam`` values are ordered: ``S_up`` or ``S_down``."""

    C1_ASCENDING = "c1-ascending"
    C1_DESCENDING = "c1-descending"


def lex_ordering(
    costs: BiCost,
    lam: Fraction,
    tiebreak: Tiebreak = Tiebreak.C1_ASCENDING,
    elements: Iterable[int] | None = None,
) -> Ordering:
    """Order by ``c_lam``, then ``c1`` per ``tiebreak``, then element id."""

    ids = range(len(costs)) if elements is None else elements
    sign = 1 if tiebreak is Tiebreak.C1_ASCENDING else -1
    return tuple(
        sorted(ids, key=lambda e: (weighted_cost(lam, e, costs), sign * costs.c1[e], e))
    )


def objective_ordering(
    costs: BiCost, first: int = 1, elements: Iterable[int] | None = None
) -> Ordering:
    """Lexicographic ordering by ``(c1, c2)`` (``first=1``) or ``(c2, c1)``."""

    if first not in (1, 2):
        raise InputError("Objective index must be 1 or 2.")
    ids = range(len(costs)) if elements is None else elements
    if first == 1:
        return tuple(sorted(ids, key=lambda e: (costs.c1[e], costs.c2[e], e)))
    return tuple(sorted(ids, key=lambda e: (costs.c2[e], costs.c1[e], e)))


def greedy_basis(instance: MatroidInstance, ordering: Sequence[int]) -> Basis:
    """Scan ``ordering`` and keep every element that preserves independence."""

    if sorted(ordering) != sorted(instance.elements()):
        raise InputError("The ordering must be a permutation of the ground set.")
    rank = instance.rank
    chosen: list[int] = []
    for e in ordering:
        if len(chosen) == rank:
            break
        if instance.is_independent((*chosen, e)):
            chosen.append(e)
    return as_basis(chosen)
