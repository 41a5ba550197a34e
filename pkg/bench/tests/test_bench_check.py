import json

import pytest

from bench_harness import BenchError
from bench_harness.checker import compare_to_reference
from bench_harness.cli import main
from bench_harness.specs import load_reference

from conftest import SPECS, tiny_classification_dict


def transcribed_logistic_report() -> dict:
    return {
        "model": "LogisticRegression",
        "params": {"C": 5},
        "metrics": {"accuracy": 0.8167, "precision": 0.7857,
                    "recall": 0.5789, "roc_auc": 0.8588},
        "cv_mean": 0.8409,
        "cv_scores": None,
        "test_score": 0.8167,
    }


# ---------------------------------------------------------------------------
# comparison semantics
# ---------------------------------------------------------------------------

def test_exact_transcription_passes_against_itself():
    table = load_reference(SPECS / "heart.reference.json")
    result = compare_to_reference([transcribed_logistic_report()], table)
    assert result.overall_pass
    assert all(verdict.passed for verdict in result.verdicts)


def test_out_of_tolerance_fails_naming_model_and_metric():
    table = load_reference(SPECS / "heart.reference.json")
    report = transcribed_logistic_report()
    report["metrics"]["roc_auc"] = 0.9200  # 0.8588 +/- 0.05 excludes this
    result = compare_to_reference([report], table)
    assert not result.overall_pass
    failed = [v for v in result.verdicts if not v.passed]
    assert [(v.model, v.metric) for v in failed] == [
        ("LogisticRegression", "roc_auc")]
    rendered = result.to_dict()
    assert rendered["overall_pass"] is False
    assert {"model": "LogisticRegression", "metric": "roc_auc",
            "expected": 0.8588, "observed": 0.92, "tolerance": 0.05,
            "pass": False} in rendered["checks"]


def test_boundary_exactly_at_tolerance_passes():
    table = load_reference(SPECS / "heart.reference.json")
    report = transcribed_logistic_report()
    report["metrics"]["accuracy"] = 0.8667  # 0.8167 + 0.05 exactly
    assert compare_to_reference([report], table).overall_pass


def test_missing_model_is_an_error():
    table = load_reference(SPECS / "diabetes.reference.json")
    with pytest.raises(BenchError, match="GradientBoostingClassifier"):
        compare_to_reference([transcribed_logistic_report()], table)


def test_missing_metric_is_an_error():
    table = load_reference(SPECS / "heart.reference.json")
    report = transcribed_logistic_report()
    del report["metrics"]["roc_auc"]
    with pytest.raises(BenchError, match="roc_auc"):
        compare_to_reference([report], table)


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_run_writes_reports(capsys, tmp_path):
    spec_path = tmp_path / "tiny.json"
    data = tiny_classification_dict()
    data["models"] = [data["models"][0]]
    spec_path.write_text(json.dumps(data))
    out = tmp_path / "reports.json"
    code, stdout, _ = run_cli(
        capsys, "run", "--spec", str(spec_path), "--out", str(out))
    assert code == 0
    assert str(out) in stdout
    assert json.loads(out.read_text())["reports"][0]["model"] \
        == "LogisticRegression"


def test_cli_check_passes_on_transcription(capsys, tmp_path):
    reports = tmp_path / "reports.json"
    reports.write_text(json.dumps([transcribed_logistic_report()]))
    code, stdout, _ = run_cli(
        capsys, "check", "--reports", str(reports),
        "--reference", str(SPECS / "heart.reference.json"))
    assert code == 0
    assert json.loads(stdout)["overall_pass"] is True


def test_cli_check_fails_out_of_tolerance(capsys, tmp_path):
    report = transcribed_logistic_report()
    report["metrics"]["accuracy"] = 0.5
    reports = tmp_path / "reports.json"
    reports.write_text(json.dumps([report]))
    code, stdout, _ = run_cli(
        capsys, "check", "--reports", str(reports),
        "--reference", str(SPECS / "heart.reference.json"))
    assert code == 1
    assert json.loads(stdout)["overall_pass"] is False


def test_cli_missing_spec_file_exits_2(capsys, tmp_path):
    code, _, stderr = run_cli(
        capsys, "run", "--spec", str(tmp_path / "absent.json"),
        "--out", str(tmp_path / "out.json"))
    assert code == 2
    assert "error:" in stderr


def test_cli_malformed_spec_json_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, stderr = run_cli(
        capsys, "run", "--spec", str(bad),
        "--out", str(tmp_path / "out.json"))
    assert code == 2
    assert "JSON" in stderr


def test_cli_unknown_model_exits_1(capsys, tmp_path):
    data = tiny_classification_dict()
    data["models"][0]["name"] = "Crystal ball"
    spec_path = tmp_path / "odd.json"
    spec_path.write_text(json.dumps(data))
    code, _, stderr = run_cli(
        capsys, "run", "--spec", str(spec_path),
        "--out", str(tmp_path / "out.json"))
    assert code == 1
    assert "Crystal ball" in stderr


def test_cli_usage_error_exits_2(capsys):
    code, _, _ = run_cli(capsys, "run")
    assert code == 2
