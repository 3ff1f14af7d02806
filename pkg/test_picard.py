from fractions import Fraction

import pytest

from kannan import settings
from kannan.conditions import evaluate_condition, exhaustive_pairs
from kannan.errors import TheoremContradictionError
from kannan.models.maps import TableMap, constant_map, identity_map
from kannan.models.spaces import sample_points
from kannan.models.specs import StrictKannan
from kannan.picard import run_picard, uniqueness_probe, verify_fixed_point, verify_picard_operator


def test_drop_from_two(split_set, drop):
    run = run_picard(split_set, drop, split_set.point(2), 10)
    assert run.fixed_point == split_set.point(0)
    assert run.gap_monotone
    assert run.orbit.gaps == [3, 1, 0]
    assert run.pairwise_bound_ok


def test_halving_on_unit_interval(unit_interval, halving):
    run = run_picard(unit_interval, halving, unit_interval.point("1/2"), 20)
    gaps = run.orbit.gaps
    assert run.orbit.status.kind == "truncated"
    assert run.fixed_point is None
    assert run.gap_monotone
    assert all(gaps[i + 1] * 2 == gaps[i] for i in range(len(gaps) - 1))
    assert run.gap_limit_evidence == Fraction(1, 2 ** 21)
    assert run.cauchy_evidence < Fraction(1, 2 ** 15)


def test_run_from_fixed_point(split_set, drop):
    zero = split_set.point(0)
    run = run_picard(split_set, drop, zero, 5)
    assert run.fixed_point == zero
    assert run.orbit.status.index == 0
    assert run.gap_monotone
    assert run.pairwise_bound_ok


def test_horizon_cap(split_set, drop):
    with pytest.raises(ValueError):
        run_picard(split_set, drop, split_set.point(2), settings.MAX_PAIRWISE_HORIZON + 1)


def test_report_serializes_scalars_as_text(split_set, drop):
    report = run_picard(split_set, drop, split_set.point(2), 10).to_report().model_dump(mode="json")
    assert report["orbit"]["gaps"] == ["3", "1", "0"]
    assert report["fixed_point"] == "0"


@pytest.mark.parametrize("value, is_fixed, residual", [
    ("0", True, Fraction(0)),
    ("2", False, Fraction(3)),
])
def test_verify_fixed_point_drop(split_set, drop, value, is_fixed, residual):
    check = verify_fixed_point(split_set, drop, split_set.point(value))
    assert check.is_fixed is is_fixed
    assert check.residual == residual


def test_triple_has_no_fixed_point_at_one(gornicki, triple):
    check = verify_fixed_point(gornicki, triple, gornicki.point(1))
    assert not check.is_fixed
    assert check.residual == Fraction(5, 3)


def test_uniqueness_on_split_set_sample(split_set, drop):
    found = uniqueness_probe(split_set, drop, sample_points(split_set, 50, seed=0))
    assert found == [split_set.point(0)]


def test_triple_is_fixed_point_free(gornicki, triple):
    assert uniqueness_probe(gornicki, triple, [gornicki.point(v) for v in range(1, 101)]) == []


def test_identity_has_every_fixed_point(two_points):
    assert uniqueness_probe(two_points, identity_map(two_points), two_points.points()) == two_points.points()


def test_two_fixed_points_under_strict_kannan_is_a_contradiction(monkeypatch, two_points):
    holding = evaluate_condition(StrictKannan(), two_points, constant_map(two_points, two_points.point("a")),
                                 exhaustive_pairs(two_points))
    monkeypatch.setattr("kannan.picard.evaluate_condition", lambda *args: holding)
    with pytest.raises(TheoremContradictionError):
        uniqueness_probe(two_points, identity_map(two_points), two_points.points())


def test_strict_check_covers_every_candidate_pair(monkeypatch, triangle):
    m = TableMap(triangle, {"a": "a", "b": "b", "c": "a"})
    seen = []

    def record(c, space, m, pairs):
        seen.append(pairs)
        return evaluate_condition(c, space, m, pairs)

    monkeypatch.setattr("kannan.picard.evaluate_condition", record)
    assert uniqueness_probe(triangle, m, triangle.points()) == [triangle.point("a"), triangle.point("b")]
    assert [p.points for p in seen] == [triangle.points()]
    assert len(seen[0]) == 3


def test_single_fixed_point_skips_the_strict_check(monkeypatch, split_set, drop):
    monkeypatch.setattr("kannan.picard.evaluate_condition", lambda *args: pytest.fail("no pair check expected"))
    assert uniqueness_probe(split_set, drop, [split_set.point(v) for v in (0, -1, 2, "3/2")]) == [split_set.point(0)]


def test_picard_operator(triangle):
    m = constant_map(triangle, triangle.point("c"))
    assert verify_picard_operator(triangle, m) == (True, triangle.point("c"))
    assert verify_picard_operator(triangle, identity_map(triangle)) == (False, None)
    swap = TableMap(triangle, {"a": "b", "b": "a", "c": "c"})
    assert verify_picard_operator(triangle, swap) == (False, None)
