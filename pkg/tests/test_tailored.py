from fractions import Fraction

from core.geometry import BiCost, WeightInterval
from core.greedy import Tiebreak, greedy_basis, lex_ordering
from core.matroids import UniformMatroid
from core.tailored import event_schedule_for, tailored_esn_sweep, tailored_trace
from tests.helpers import ex28, fig1, point


def test_fig1_trace_follows_events() -> None:
    graph, costs = fig1()
    trace = list(tailored_trace(graph, costs))
    assert [lam for lam, _ in trace] == [
        Fraction(0),
        Fraction(2, 5),
        Fraction(4, 9),
        Fraction(1, 2),
        Fraction(4, 5),
    ]
    assert trace[0][1] == (1, 2, 4, 5)
    assert trace[3][1] == (1, 2, 3, 5)
    assert trace[4][1] == (0, 1, 3, 5)


def test_trace_matches_greedy_on_ascending_order() -> None:
    graph, costs = fig1()
    for lam, basis in tailored_trace(graph, costs):
        if lam > 0:
            ordering = lex_ordering(costs, lam, Tiebreak.C1_ASCENDING)
            assert basis == greedy_basis(graph, ordering)


def test_fig1_frontier_and_decomposition() -> None:
    graph, costs = fig1()
    report = tailored_esn_sweep(graph, costs)
    assert report.esn_points == [point(6, 2), point(2, 6), point(1, 10)]
    assert report.representatives == [(1, 2, 4, 5), (1, 2, 3, 5), (0, 1, 3, 5)]
    assert [interval for interval, _ in report.weight_decomposition] == [
        WeightInterval(Fraction(0), Fraction(1, 2)),
        WeightInterval(Fraction(1, 2), Fraction(4, 5)),
        WeightInterval(Fraction(4, 5), Fraction(1)),
    ]
    assert report.stats.iterations == 4
    assert report.stats.independence_tests > 0


def test_ex28_frontier() -> None:
    graph, costs = ex28()
    report = tailored_esn_sweep(graph, costs)
    assert report.esn_points == [point(12, 4), point(4, 12)]
    assert [interval for interval, _ in report.weight_decomposition] == [
        WeightInterval(Fraction(0), Fraction(1, 2)),
        WeightInterval(Fraction(1, 2), Fraction(1)),
    ]


def test_no_events_gives_single_point() -> None:
    uniform = UniformMatroid(4, 2)
    costs = BiCost.from_pairs([(1, 1), (2, 2), (3, 3), (4, 4)])
    assert len(event_schedule_for(uniform, costs)) == 0
    report = tailored_esn_sweep(uniform, costs)
    assert report.esn_points == [point(3, 3)]
    assert report.weight_decomposition == [
        (WeightInterval(Fraction(0), Fraction(1)), point(3, 3))
    ]
    assert report.stats.iterations == 0
