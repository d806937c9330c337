from fractions import Fraction

import pytest

from core.errors import InputError
from core.greedy import Tiebreak, greedy_basis, lex_ordering, objective_ordering
from core.matroids import UniformMatroid
from tests.helpers import fig1


def test_lex_orderings_break_ties_by_c1() -> None:
    _, costs = fig1()
    half = Fraction(1, 2)
    # c_1/2: e0=3/2, e1=e2=0, e3=e4=e5=2
    assert lex_ordering(costs, half, Tiebreak.C1_ASCENDING) == (1, 2, 0, 3, 5, 4)
    assert lex_ordering(costs, half, Tiebreak.C1_DESCENDING) == (1, 2, 0, 4, 5, 3)


def test_objective_orderings() -> None:
    _, costs = fig1()
    assert objective_ordering(costs, first=1) == (0, 1, 2, 3, 5, 4)
    assert objective_ordering(costs, first=2) == (1, 2, 4, 5, 0, 3)
    with pytest.raises(InputError):
        objective_ordering(costs, first=3)


def test_greedy_on_fig1_orderings() -> None:
    graph, costs = fig1()
    assert greedy_basis(graph, objective_ordering(costs, first=2)) == (1, 2, 4, 5)
    assert greedy_basis(graph, objective_ordering(costs, first=1)) == (0, 1, 3, 5)
    assert greedy_basis(graph, lex_ordering(costs, Fraction(1, 2))) == (1, 2, 3, 5)


def test_greedy_minimises_weighted_sum() -> None:
    graph, costs = fig1()
    basis = greedy_basis(graph, lex_ordering(costs, Fraction(0)))
    assert costs.image(basis).y2 == 2


def test_greedy_stops_at_rank() -> None:
    uniform = UniformMatroid(5, 2)
    assert greedy_basis(uniform, (4, 3, 2, 1, 0)) == (3, 4)


def test_greedy_rejects_partial_ordering() -> None:
    graph, _ = fig1()
    with pytest.raises(InputError):
        greedy_basis(graph, (0, 1, 2))
