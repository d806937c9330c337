from fractions import Fraction

import pytest

from core.errors import InputError, SolverLogicError, UndefinedSlopeError
from core.geometry import (
    FrontierLabel,
    Slope,
    WeightInterval,
    alpha_of_lambda,
    build_event_schedule,
    classify_frontier,
    critical_pairs,
    lambda_of_alpha,
    lower_left_chain,
    nondominated_filter,
    parse_rational,
    slope_between,
    weight_interval,
    weighted_cost,
)
from tests.helpers import fig1, point

FIG1_IMAGES = [
    point(6, 2),
    point(2, 6),
    point(1, 10),
    point(4, 4),
    point(5, 6),
    point(3, 8),
]


def test_parse_rational_accepts_integers_and_fractions() -> None:
    assert parse_rational("3") == 3
    assert parse_rational("-7/21") == Fraction(-1, 3)
    assert parse_rational(" 4 / 6 ") == Fraction(2, 3)
    assert parse_rational(5) == 5


@pytest.mark.parametrize("raw", ["1/0", "0.5", "abc", "", "1/-2"])
def test_parse_rational_rejects_malformed(raw: str) -> None:
    with pytest.raises(InputError):
        parse_rational(raw)


def test_parse_rational_rejects_floats() -> None:
    with pytest.raises(InputError):
        parse_rational(0.5)


def test_weighted_cost() -> None:
    _, costs = fig1()
    assert weighted_cost(Fraction(1, 2), 0, costs) == Fraction(3, 2)
    assert weighted_cost(Fraction(0), 4, costs) == 0
    assert weighted_cost(Fraction(1), 4, costs) == 4
    with pytest.raises(InputError):
        weighted_cost(Fraction(3, 2), 0, costs)


def test_slope_between() -> None:
    assert slope_between(point(6, 2), point(2, 6)) == Slope.finite(-1)
    assert slope_between(point(2, 6), point(1, 10)) == Slope.finite(-4)
    with pytest.raises(UndefinedSlopeError):
        slope_between(point(2, 6), point(2, 8))


def test_duality_examples() -> None:
    assert alpha_of_lambda(Fraction(1, 2)) == Slope.finite(-1)
    assert lambda_of_alpha(Slope.finite(-4)) == Fraction(4, 5)
    assert alpha_of_lambda(Fraction(0)) == Slope.zero()
    assert alpha_of_lambda(Fraction(1)).is_neg_inf
    assert lambda_of_alpha(Slope.neg_inf()) == 1
    with pytest.raises(InputError):
        lambda_of_alpha(Slope.finite(2))


def test_duality_round_trip_on_grid() -> None:
    for numerator in range(0, 12):
        lam = Fraction(numerator, 11)
        assert lambda_of_alpha(alpha_of_lambda(lam)) == lam


def test_neg_inf_orders_below_every_slope() -> None:
    assert Slope.neg_inf() < Slope.finite(-10**9)
    assert max(Slope.neg_inf(), Slope.finite(-3)) == Slope.finite(-3)
    assert str(Slope.neg_inf()) == "-inf"


def test_fig1_critical_pairs_and_events() -> None:
    _, costs = fig1()
    pairs = critical_pairs(costs)
    assert all(Fraction(0) < pair.lam < Fraction(1) for pair in pairs)
    assert pairs == sorted(pairs, key=lambda p: (p.lam, p.e, p.f))
    schedule = build_event_schedule(pairs)
    assert schedule.lambdas == [
        Fraction(2, 5),
        Fraction(4, 9),
        Fraction(1, 2),
        Fraction(4, 5),
    ]
    assert [event.elements for event in schedule] == [
        frozenset({0, 5}),
        frozenset({0, 4}),
        frozenset({3, 4, 5}),
        frozenset({0, 1, 2}),
    ]


def test_critical_pair_crossing_weight() -> None:
    _, costs = fig1()
    for pair in critical_pairs(costs):
        assert costs.weighted(pair.lam, pair.e) == costs.weighted(pair.lam, pair.f)


def test_no_pairs_without_conflict() -> None:
    _, costs = fig1()
    assert critical_pairs(costs, elements=[1, 2]) == []
    assert len(build_event_schedule([])) == 0


def test_nondominated_filter() -> None:
    kept = nondominated_filter(FIG1_IMAGES + [point(6, 2)])
    assert kept == frozenset({point(6, 2), point(2, 6), point(1, 10), point(4, 4)})


def test_lower_left_chain_on_fig1() -> None:
    assert lower_left_chain(FIG1_IMAGES) == [point(1, 10), point(2, 6), point(6, 2)]


def test_classify_fig1_images() -> None:
    labels = classify_frontier(FIG1_IMAGES)
    assert labels[point(1, 10)] is FrontierLabel.EXTREME
    assert labels[point(2, 6)] is FrontierLabel.EXTREME
    assert labels[point(6, 2)] is FrontierLabel.EXTREME
    assert labels[point(4, 4)] is FrontierLabel.SUPPORTED
    assert labels[point(5, 6)] is FrontierLabel.DOMINATED
    assert labels[point(3, 8)] is FrontierLabel.DOMINATED


def test_classify_unsupported_point() -> None:
    labels = classify_frontier([point(0, 10), point(10, 0), point(6, 6)])
    assert labels[point(6, 6)] is FrontierLabel.UNSUPPORTED


def test_classify_single_point() -> None:
    assert classify_frontier([point(3, 3)]) == {point(3, 3): FrontierLabel.EXTREME}


def test_weight_interval_bounds() -> None:
    interval = weight_interval(Slope.zero(), Slope.finite(-1))
    assert interval == WeightInterval(Fraction(0), Fraction(1, 2))
    assert interval.is_extreme
    assert weight_interval(Slope.finite(-4), Slope.neg_inf()) == WeightInterval(
        Fraction(4, 5), Fraction(1)
    )
    assert not weight_interval(Slope.finite(-1), Slope.finite(-1)).is_extreme
    with pytest.raises(SolverLogicError):
        weight_interval(Slope.finite(-4), Slope.finite(-1))
