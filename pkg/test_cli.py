import json

import pytest

from cli.run import main
from cli.utils.validation import ExitCode, get_exit_code
from kannan.errors import ClosureError, MembershipError, SpecError, TheoremContradictionError
from kannan.models.reports import (CensusReport, ConditionReport, GalleryReport, PicardReport, RunOutput)

TWO_POINTS = json.dumps({"kind": "finite", "labels": ["a", "b"], "d": [["0", "1"], ["1", "0"]]})
IDENTITY = json.dumps({"kind": "table", "assign": {"a": "a", "b": "b"}})
HALVING = json.dumps({"kind": "scale", "c": "1/2"})


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_check_split_set(capsys):
    code, out = run(capsys, "check", "--space", "split_set", "--map", "piecewise_drop", "--expect", "holds")
    assert code == ExitCode.OK
    output = RunOutput.model_validate_json(out.out)
    assert output.config["command"] == "check"
    report = ConditionReport.model_validate(output.result)
    assert report.holds
    assert report.pairs_checked == 200 * 199 // 2


def test_check_expectation_mismatch(capsys):
    code, out = run(capsys, "check", "--space", TWO_POINTS, "--map", IDENTITY, "--expect", "holds")
    assert code == ExitCode.EXPECTATION_MISMATCH
    report = ConditionReport.model_validate(json.loads(out.out)["result"])
    assert report.violation.x == "a"
    assert report.domain_exhausted


def test_check_several_conditions(capsys):
    code, out = run(capsys, "check", "--space", TWO_POINTS, "--map", IDENTITY, "--condition", "khan",
                    "--condition", "kannan_k:1/4", "--expect", "violated")
    assert code == ExitCode.OK
    assert out.out.count('"kannan_ratio"') == 2


def test_check_human_format(capsys):
    code, out = run(capsys, "check", "--space", "gornicki_nat", "--map", "triple_nat",
                    "--pairs", '["1", "2"]', "--format", "human")
    assert code == ExitCode.OK
    assert out.out.startswith("# config: ")
    assert "holds on checked pairs" in out.out
    assert "7/18 (≈0.388889)" in out.out


def test_iterate_csv_trace(capsys):
    code, out = run(capsys, "iterate", "--space", "unit_interval_right", "--map", HALVING, "--x0", "1/2",
                    "--horizon", "5", "--format", "csv")
    assert code == ExitCode.OK
    lines = out.out.splitlines()
    assert lines[0].startswith("# config: ")
    assert lines[1:] == ["step,point,gap", "0,1/2,1/4", "1,1/4,1/8", "2,1/8,1/16", "3,1/16,1/32",
                         "4,1/32,1/64", "5,1/64,"]


def test_iterate_json(capsys):
    code, out = run(capsys, "iterate", "--space", "split_set", "--map", "piecewise_drop", "--x0", "2",
                    "--expect", "holds")
    assert code == ExitCode.OK
    report = PicardReport.model_validate(json.loads(out.out)["result"])
    assert report.fixed_point == "0"


def test_csv_is_not_available_for_check(capsys):
    code, out = run(capsys, "check", "--space", TWO_POINTS, "--map", IDENTITY, "--format", "csv")
    assert code == ExitCode.CONFIG_ERROR
    assert "csv output is not available" in out.err


def test_census_two_points(capsys):
    code, out = run(capsys, "census", "--size", "2", "--seed", "0")
    assert code == ExitCode.OK
    report = CensusReport.model_validate(json.loads(out.out)["result"])
    assert len(report.rows) == 4
    assert sum(row.satisfies["strict_kannan"] for row in report.rows) == 2


def test_census_csv(capsys):
    code, out = run(capsys, "census", "--space", TWO_POINTS, "--condition", "fisher", "--format", "csv")
    assert code == ExitCode.OK
    lines = out.out.splitlines()
    assert lines[1] == "map_id,strict_kannan,fisher,fixed_point_count,converges,common_limit"
    assert lines[2] == "00,true,true,1,true,a"
    assert lines[3] == "01,false,false,2,false,"


def test_census_serial_and_parallel_are_identical(capsys):
    _, serial = run(capsys, "census", "--size", "4", "--seed", "3", "--workers", "1")
    _, parallel = run(capsys, "census", "--size", "4", "--seed", "3", "--workers", "2")
    assert serial.out == parallel.out


def test_census_rejects_catalog_space(capsys):
    code, _ = run(capsys, "census", "--space", "half_line")
    assert code == ExitCode.CONFIG_ERROR


def test_counterexample(capsys):
    code, out = run(capsys, "counterexample", "--prefix", "20", "--expect", "holds")
    assert code == ExitCode.OK
    result = json.loads(out.out)["result"]
    assert result["construction"][:2] == [{"source_index": 1, "target_index": 5},
                                          {"source_index": 2, "target_index": 13}]
    assert result["fixed_points"] == []


def test_epsdelta(capsys):
    code, out = run(capsys, "epsdelta", "--space", "half_line", "--map", '{"kind": "scale", "c": "2"}',
                    "--x0", "1/8", "--eps", "1/4", "--delta", "1/4,1/8", "--horizon", "16", "--expect", "violated")
    assert code == ExitCode.OK
    assert json.loads(out.out)["result"]["entries"][0]["failing_pair"] == [1, 2]


def test_gallery_small(capsys):
    code, out = run(capsys, "gallery", "--gornicki-n", "2", "--prefix", "30")
    assert code == ExitCode.OK
    report = GalleryReport.model_validate(json.loads(out.out)["result"])
    assert [s.name for s in report.sections] == [
        "orbit_probes", "picard_unit_interval", "split_set_drop", "gornicki_answer", "completeness_counterexample",
    ]
    assert report.passed


def test_gallery_is_deterministic(capsys):
    _, first = run(capsys, "gallery", "--gornicki-n", "20", "--prefix", "20", "--format", "human")
    _, second = run(capsys, "gallery", "--gornicki-n", "20", "--prefix", "20", "--format", "human")
    assert first.out == second.out
    assert "[as-paper] split_set_drop" in first.out


@pytest.mark.slow
def test_gallery_default(capsys):
    code, out = run(capsys, "gallery")
    assert code == ExitCode.OK
    assert GalleryReport.model_validate(json.loads(out.out)["result"]).passed


def test_gallery_with_corrupted_space(capsys, tmp_path):
    space_file = tmp_path / "split.json"
    space_file.write_text(json.dumps({"kind": "split_set", "sample": ["2", "-1", "0", "1/2"]}), encoding="utf-8")
    code, out = run(capsys, "gallery", "--gornicki-n", "2", "--prefix", "5", "--space", str(space_file))
    assert code == ExitCode.MEMBERSHIP_ERROR
    assert "not a point of SplitSet" in out.err


def test_missing_space_file(capsys):
    code, _ = run(capsys, "check", "--space", "no/such/file.json", "--map", "piecewise_drop")
    assert code == ExitCode.CONFIG_ERROR


def test_bad_kannan_constant(capsys):
    code, _ = run(capsys, "check", "--space", TWO_POINTS, "--map", IDENTITY, "--condition", "kannan_k:1/2")
    assert code == ExitCode.CONFIG_ERROR


def test_start_outside_space(capsys):
    code, out = run(capsys, "iterate", "--space", "unit_interval_right", "--map", HALVING, "--x0", "1")
    assert code == ExitCode.MEMBERSHIP_ERROR


def test_schema_export(capsys, tmp_path):
    code, _ = run(capsys, "schema", "--out", str(tmp_path))
    assert code == ExitCode.OK
    schema = json.loads((tmp_path / "check.output.schema.json").read_text(encoding="utf-8"))
    assert "verdict" in schema["properties"]
    assert (tmp_path / "space.input.schema.json").exists()


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run(capsys, "check", "--space", TWO_POINTS, "--map", IDENTITY, "--out", str(target))
    assert code == ExitCode.OK
    assert out.out == ""
    assert RunOutput.model_validate_json(target.read_text(encoding="utf-8")).config["space"] == TWO_POINTS


@pytest.mark.parametrize("error, code", [
    (TheoremContradictionError(["map 00"]), ExitCode.THEOREM_CONTRADICTION),
    (MembershipError("SplitSet", "1/2"), ExitCode.MEMBERSHIP_ERROR),
    (ClosureError("Scale", "1/2", "1"), ExitCode.MEMBERSHIP_ERROR),
    (SpecError("bad"), ExitCode.CONFIG_ERROR),
    (ValueError("bad"), ExitCode.CONFIG_ERROR),
])
def test_exit_codes(error, code):
    assert get_exit_code(error) == code


def test_unknown_errors_propagate():
    with pytest.raises(RuntimeError):
        get_exit_code(RuntimeError("boom"))
