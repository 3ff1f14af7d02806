from fractions import Fraction

import pytest
from pydantic import ValidationError

from kannan.conditions import (check_epsdelta_orbit, evaluate_condition, evaluate_pair, exhaustive_pairs,
                               replay_violation, sample_pairs)
from kannan.errors import InvalidConditionError
from kannan.models.maps import Scale, TableMap, constant_map, identity_map
from kannan.models.spaces import sample_points
from kannan.models.specs import (ChenYeh, Fisher, IteratedKannan, KannanK, Khan, PairValue, StrictKannan)

F = Fraction


def test_split_set_pair(split_set, drop):
    outcome = evaluate_pair(StrictKannan(), split_set, drop, split_set.point("3/2"), split_set.point(2))
    assert outcome.ok
    assert outcome.lhs == 1
    assert outcome.rhs == "9/4"


def test_gornicki_pair(gornicki, triple):
    outcome = evaluate_pair(StrictKannan(), gornicki, triple, gornicki.point(1), gornicki.point(2))
    assert outcome.ok
    assert outcome.lhs == F(7, 6)
    assert outcome.rhs == "3/2"


def test_identity_map_violates_strict_kannan(triangle):
    report = evaluate_condition(StrictKannan(), triangle, identity_map(triangle), exhaustive_pairs(triangle))
    assert not report.holds
    assert report.violation.x == "a"
    assert report.violation.y == "b"
    assert report.violation.lhs == 1
    assert report.violation.rhs == "0"
    assert report.pairs_checked == 1


def test_constant_map_satisfies_kannan_k(triangle):
    m = constant_map(triangle, triangle.point("b"))
    report = evaluate_condition(KannanK(k="1/4"), triangle, m, exhaustive_pairs(triangle))
    assert report.holds
    assert report.domain_exhausted
    assert report.pairs_checked == 3
    assert report.kannan_ratio == 0


@pytest.mark.parametrize("k", ["1/2", "-1/4", "1"])
def test_kannan_constant_out_of_range(k):
    with pytest.raises(ValidationError):
        KannanK(k=k)


def test_split_set_sample_holds(split_set, drop):
    points = sample_points(split_set, 60, seed=3)
    report = evaluate_condition(StrictKannan(), split_set, drop, sample_pairs(split_set, points, seed=3))
    assert report.holds
    assert report.pairs_checked == 60 * 59 // 2
    assert not report.domain_exhausted
    assert report.kannan_ratio < F(1, 2)
    assert "sample set only; no claim about the whole space" in report.notes


def test_sample_pairs_reject_duplicates(split_set):
    with pytest.raises(ValueError):
        sample_pairs(split_set, [split_set.point(2), split_set.point(2)])


def test_violation_replays(triangle):
    m = identity_map(triangle)
    report = evaluate_condition(StrictKannan(), triangle, m, exhaustive_pairs(triangle))
    assert replay_violation(report, StrictKannan(), triangle, m)


def test_replay_of_holding_report_is_false(two_points):
    m = constant_map(two_points, two_points.point("a"))
    report = evaluate_condition(StrictKannan(), two_points, m, exhaustive_pairs(two_points))
    assert not replay_violation(report, StrictKannan(), two_points, m)


def test_khan_boundary_is_exact(two_points):
    # d(Ta, Tb) = 1 = sqrt(d(a,Ta) d(b,Tb)) для перестановки
    swap = TableMap(two_points, {"a": "b", "b": "a"})
    outcome = evaluate_pair(Khan(), two_points, swap, two_points.point("a"), two_points.point("b"))
    assert not outcome.ok
    assert outcome.rhs == "sqrt(1)"


def test_fisher(two_points):
    m = constant_map(two_points, two_points.point("b"))
    report = evaluate_condition(Fisher(), two_points, m, exhaustive_pairs(two_points))
    assert report.holds


def test_chen_yeh_with_zero_tables_follows_kannan(triangle):
    m = TableMap.from_digits(triangle, [1, 1, 1])
    pairs = exhaustive_pairs(triangle)
    assert evaluate_condition(StrictKannan(), triangle, m, pairs).holds
    report = evaluate_condition(ChenYeh(), triangle, m, pairs)
    assert report.condition == "chen_yeh(a=0,b=0)"
    assert report.holds


def test_chen_yeh_rejects_negative_tables(two_points):
    c = ChenYeh(a=[PairValue(x="a", y="b", value="-1")])
    with pytest.raises(InvalidConditionError):
        evaluate_pair(c, two_points, identity_map(two_points), two_points.point("a"), two_points.point("b"))


def test_chen_yeh_table_lookup_is_symmetric(two_points):
    c = ChenYeh(b=[PairValue(x="b", y="a", value="2")], b_default="1/3")
    assert c.lookup("b", two_points.point("a"), two_points.point("b")) == 2
    assert c.lookup("a", two_points.point("a"), two_points.point("b")) == 0
    assert c.label == "chen_yeh"


def test_chen_yeh_refinement(two_points):
    swap = TableMap(two_points, {"a": "b", "b": "a"})
    pairs = exhaustive_pairs(two_points)
    ok = evaluate_condition(ChenYeh(a_default="1", uniqueness_refinement=True), two_points, swap, pairs)
    assert ok.refinement_ok is True
    too_big = evaluate_condition(ChenYeh(b_default="2", uniqueness_refinement=True), two_points, swap, pairs)
    assert too_big.refinement_ok is False


def test_iterated_kannan(two_points):
    swap = TableMap(two_points, {"a": "b", "b": "a"})
    pairs = exhaustive_pairs(two_points)
    assert not evaluate_condition(IteratedKannan(m=1), two_points, swap, pairs).holds
    m = constant_map(two_points, two_points.point("a"))
    # после одного шага обе точки неподвижны, строгое неравенство 0 < 0 не выполняется
    assert not evaluate_condition(IteratedKannan(m=1), two_points, m, pairs).holds
    assert evaluate_condition(IteratedKannan(m=0), two_points, m, pairs).holds


def test_epsdelta_halving_passes(half_line):
    m = Scale(half_line, F(1, 2))
    report = check_epsdelta_orbit(half_line, m, half_line.point(1), [F(1, 4)], [F(1, 4)], 64)
    assert report.evidence_only is True
    assert report.passed
    assert report.entries[0].delta == F(1, 4)


def test_epsdelta_halving_passes_on_the_whole_grid(half_line):
    m = Scale(half_line, F(1, 2))
    grid = [F(1, 2 ** i) for i in range(1, 11)]
    for eps in grid:
        assert check_epsdelta_orbit(half_line, m, half_line.point(1), [eps], [eps], 64).passed


def test_epsdelta_constant_map_passes(half_line):
    m = constant_map(half_line, half_line.point(3))
    report = check_epsdelta_orbit(half_line, m, half_line.point(0), [F(1, 8), F(1)], [F(1, 100)], 10)
    assert report.passed


def test_epsdelta_doubling_from_one_is_vacuous(half_line):
    m = Scale(half_line, 2)
    report = check_epsdelta_orbit(half_line, m, half_line.point(1), [F(1, 4)], [F(1, 4), F(1, 8)], 16)
    assert report.passed


def test_epsdelta_doubling_fails(half_line):
    m = Scale(half_line, 2)
    report = check_epsdelta_orbit(half_line, m, half_line.point("1/8"), [F(1, 4)], [F(1, 4), F(1, 8)], 16)
    assert not report.passed
    entry = report.entries[0]
    assert entry.delta is None
    assert entry.failing_pair == [1, 2]


def test_epsdelta_rejects_non_positive_eps(half_line):
    with pytest.raises(ValueError):
        check_epsdelta_orbit(half_line, Scale(half_line, 2), half_line.point(1), [F(0)], [F(1)], 4)
