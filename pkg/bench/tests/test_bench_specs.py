import json

import pytest

from bench_harness import BenchError
from bench_harness.specs import (
    Expectation,
    load_reference,
    load_spec,
    spec_from_dict,
)

from conftest import SPECS, tiny_classification_dict


# ---------------------------------------------------------------------------
# benchmark specs
# ---------------------------------------------------------------------------

def test_bundled_specs_all_load():
    for path in sorted(SPECS.glob("*.json")):
        if ".reference." in path.name:
            load_reference(path)
        else:
            spec = load_spec(path)
            assert spec.models
            assert 0 < spec.split.test_fraction < 1


def test_relative_dataset_paths_resolve_against_the_spec_file():
    spec = load_spec(SPECS / "heart_synthetic.json")
    assert spec.dataset.is_absolute()
    assert spec.dataset.name == "heart_synthetic.csv"
    assert spec.dataset.exists()


def test_seed_and_split_defaults():
    data = tiny_classification_dict()
    del data["seed"]
    del data["split"]
    spec = spec_from_dict(data)
    assert spec.seed == 42
    assert spec.split.test_fraction == 0.2
    assert spec.split.stratified is False


@pytest.mark.parametrize("fraction", [0.0, 1.0, -0.1, 1.5])
def test_test_fraction_must_be_a_proper_fraction(fraction):
    data = tiny_classification_dict()
    data["split"]["test_fraction"] = fraction
    with pytest.raises(BenchError, match="test_fraction"):
        spec_from_dict(data)


def test_empty_model_list_rejected():
    data = tiny_classification_dict()
    data["models"] = []
    with pytest.raises(BenchError, match="no models"):
        spec_from_dict(data)


def test_unknown_model_name_rejected():
    data = tiny_classification_dict()
    data["models"][0]["name"] = "QuantumForest"
    with pytest.raises(BenchError, match="QuantumForest"):
        spec_from_dict(data)


def test_empty_grid_values_rejected():
    data = tiny_classification_dict()
    data["models"][0]["grid"] = {"C": []}
    with pytest.raises(BenchError, match="empty"):
        spec_from_dict(data)


def test_malformed_spec_mapping_is_a_domain_error():
    with pytest.raises(BenchError, match="malformed benchmark spec"):
        spec_from_dict({"dataset": "x.csv"})


# ---------------------------------------------------------------------------
# reference tables
# ---------------------------------------------------------------------------

def test_reference_rows_parse_with_tolerances():
    table = load_reference(SPECS / "heart.reference.json")
    row = table.rows[0]
    assert row.model == "LogisticRegression"
    assert row.expect["accuracy"].value == 0.8167
    assert row.expect["accuracy"].tolerance == 0.05


def test_absolute_tolerance_bound():
    expectation = Expectation(value=0.8, tolerance=0.05)
    assert expectation.accepts(0.85)
    assert expectation.accepts(0.75)
    assert not expectation.accepts(0.8501)


def test_relative_tolerance_bound():
    expectation = Expectation(value=200.0, tolerance=0.10, relative=True)
    assert expectation.bound == 20.0
    assert expectation.accepts(220.0)
    assert not expectation.accepts(220.1)


def test_reference_table_must_have_rows(tmp_path):
    path = tmp_path / "ref.json"
    path.write_text(json.dumps({"rows": []}))
    with pytest.raises(BenchError, match="no rows"):
        load_reference(path)
