#  License: Apache Software License 2.0


"""Testing the diagentropy datasets.py functionality."""

import pytest

from diagentropy.datasets import load_model_file, load_two_condition_model, load_worked_example_model


def test_runs_load_two_condition_model():  # noqa: D103
    try:
        model = load_two_condition_model()
    except Exception:
        pytest.fail()
    assert model.conditions.names == ('e1', 'e2')
    assert model.matrix.values.tolist() == [[0], [1]]


def test_runs_load_worked_example_model():  # noqa: D103
    try:
        model = load_worked_example_model()
    except Exception:
        pytest.fail()
    assert model.probs.tolist() == [0.05, 0.05, 0.84, 0.03, 0.03]
    assert model.matrix.symptom_names == ('d1', 'd2', 'd3')
    assert model.alphabet.size == 2


def test_worked_example_csv_matches_json():  # noqa: D103
    assert load_worked_example_model(format='csv') == load_worked_example_model(format='json')


def test_load_model_file_raises_for_unknown_file():  # noqa: D103
    with pytest.raises(FileNotFoundError):
        load_model_file('missing_model.json')
