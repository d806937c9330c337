from fractions import Fraction

from core.dichotomic import dichotomic_search
from core.geometry import BiCost, WeightInterval
from core.matroids import UniformMatroid
from tests.helpers import ex28, fig1, point


def test_fig1_dichotomic_search() -> None:
    graph, costs = fig1()
    report = dichotomic_search(graph, costs)
    assert report.esn_points == [point(6, 2), point(2, 6), point(1, 10)]
    assert report.representatives == [(1, 2, 4, 5), (1, 2, 3, 5), (0, 1, 3, 5)]
    assert [interval for interval, _ in report.weight_decomposition] == [
        WeightInterval(Fraction(0), Fraction(1, 2)),
        WeightInterval(Fraction(1, 2), Fraction(4, 5)),
        WeightInterval(Fraction(4, 5), Fraction(1)),
    ]
    # two lexicographic optima plus weighted solves at 8/13, 1/2 and 4/5
    assert report.stats.iterations == 5


def test_ex28_dichotomic_search() -> None:
    graph, costs = ex28()
    report = dichotomic_search(graph, costs)
    assert report.esn_points == [point(12, 4), point(4, 12)]
    assert report.stats.iterations == 3


def test_single_image_covers_all_weights() -> None:
    uniform = UniformMatroid(3, 2)
    costs = BiCost.from_pairs([(1, 1), (1, 1), (1, 1)])
    report = dichotomic_search(uniform, costs)
    assert report.esn_points == [point(2, 2)]
    assert report.weight_decomposition == [
        (WeightInterval(Fraction(0), Fraction(1)), point(2, 2))
    ]
    assert report.stats.iterations == 2
