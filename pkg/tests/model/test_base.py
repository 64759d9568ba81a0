#  License: Apache Software License 2.0

"""Tests for the diagnosis model domain types and their validation."""
import copy

import numpy as np
import pytest

from diagentropy.datasets import load_worked_example_model
from diagentropy.exceptions import (
    DimensionMismatchException,
    DuplicateNameException,
    IndexOutOfRangeException,
    InvalidModelException,
    MatrixValueOutOfAlphabetException,
    ParseException,
    ProbabilitySumOutOfToleranceException,
    ZeroOrNegativeProbabilityException,
)
from diagentropy.model import ConditionSet, DiagnosisModel, DiagnosticMatrix, ValueAlphabet, validate_model


@pytest.fixture
def raw_model():  # noqa: D103
    return {
        'lambda': 2,
        'conditions': [{'name': 'e1', 'p': 0.2}, {'name': 'e2', 'p': 0.3}, {'name': 'e3', 'p': 0.5}],
        'symptoms': ['d1', 'd2'],
        'matrix': [[0, 1], [1, 1], [1, 0]],
    }


def test_validate_model_accepts_valid_document(raw_model):  # noqa: D103
    model = validate_model(raw_model)
    assert model.condition_count == 3
    assert model.symptom_count == 2
    assert model.alphabet == ValueAlphabet(2)
    assert model.conditions.names == ('e1', 'e2', 'e3')
    assert model.matrix.symptom_names == ('d1', 'd2')
    assert model.probs.tolist() == [0.2, 0.3, 0.5]


def test_validate_model_preserves_probabilities_verbatim(raw_model):  # noqa: D103
    raw_model['conditions'][0]['p'] = 0.2 + 1e-12
    raw_model['conditions'][2]['p'] = 0.5 - 1e-12
    model = validate_model(raw_model)
    assert model.probs[0] == 0.2 + 1e-12


def test_validate_model_rejects_zero_probability(raw_model):  # noqa: D103
    raw_model['conditions'][0]['p'] = 0.0
    raw_model['conditions'][1]['p'] = 0.5
    with pytest.raises(ZeroOrNegativeProbabilityException, match="condition 'e1' has probability 0.0"):
        validate_model(raw_model)


def test_validate_model_rejects_negative_probability(raw_model):  # noqa: D103
    raw_model['conditions'][0]['p'] = -0.2
    raw_model['conditions'][1]['p'] = 0.7
    with pytest.raises(ZeroOrNegativeProbabilityException):
        validate_model(raw_model)


def test_validate_model_rejects_probabilities_not_summing_to_one(raw_model):  # noqa: D103
    raw_model['conditions'][2]['p'] = 0.4
    with pytest.raises(ProbabilitySumOutOfToleranceException, match='sum to 0.9'):
        validate_model(raw_model)


def test_validate_model_renormalizes_with_warning(raw_model):  # noqa: D103
    for condition in raw_model['conditions']:
        condition['p'] *= 2
    with pytest.warns(UserWarning, match='rescaled to sum to 1'):
        model = validate_model(raw_model, renormalize=True)
    assert np.allclose(model.probs, [0.2, 0.3, 0.5])


def test_validate_model_respects_custom_sum_tolerance(raw_model):  # noqa: D103
    raw_model['conditions'][2]['p'] = 0.5 + 1e-6
    with pytest.raises(ProbabilitySumOutOfToleranceException):
        validate_model(raw_model)
    assert validate_model(raw_model, sum_tolerance=1e-5).condition_count == 3


def test_validate_model_rejects_matrix_value_outside_alphabet(raw_model):  # noqa: D103
    raw_model['matrix'][1][0] = 2
    with pytest.raises(MatrixValueOutOfAlphabetException, match=r'matrix entry \(1, 0\) equals 2'):
        validate_model(raw_model)


def test_validate_model_rejects_missing_matrix_row(raw_model):  # noqa: D103
    raw_model['matrix'] = raw_model['matrix'][:2]
    with pytest.raises(DimensionMismatchException, match='2 rows but there are 3 conditions'):
        validate_model(raw_model)


def test_validate_model_rejects_short_matrix_row(raw_model):  # noqa: D103
    raw_model['matrix'][2] = [1]
    with pytest.raises(DimensionMismatchException, match='matrix row 2 holds 1 values'):
        validate_model(raw_model)


@pytest.mark.parametrize('field,names', [('conditions', 'condition'), ('symptoms', 'symptom')])
def test_validate_model_rejects_duplicate_names(raw_model, field, names):  # noqa: D103
    if field == 'conditions':
        raw_model['conditions'][1]['name'] = 'e1'
    else:
        raw_model['symptoms'] = ['d1', 'd1']
    with pytest.raises(DuplicateNameException, match=f"{names} name '.1' occurs more than once"):
        validate_model(raw_model)


def test_validate_model_rejects_empty_condition_set(raw_model):  # noqa: D103
    raw_model['conditions'] = []
    raw_model['matrix'] = []
    with pytest.raises(DimensionMismatchException):
        validate_model(raw_model)


def test_validate_model_rejects_alphabet_below_two(raw_model):  # noqa: D103
    raw_model['lambda'] = 1
    with pytest.raises(InvalidModelException, match='at least 2'):
        validate_model(raw_model)


@pytest.mark.parametrize(
    'mutation,path',
    [
        (lambda raw: raw.pop('lambda'), r'\$: missing required field .lambda.'),
        (lambda raw: raw.pop('matrix'), r'\$: missing required field .matrix.'),
        (lambda raw: raw['conditions'][1].pop('p'), r'\$.conditions\[1\]: missing'),
        (lambda raw: raw['conditions'][2].update(p='half'), r'\$.conditions\[2\].p: expected a number'),
        (lambda raw: raw['matrix'][0].__setitem__(1, 0.5), r'\$.matrix\[0\]\[1\]: expected an integer'),
        (lambda raw: raw.update(symptoms='d1'), r'\$.symptoms: expected a list'),
    ],
)
def test_validate_model_reports_offending_path(raw_model, mutation, path):  # noqa: D103
    raw = copy.deepcopy(raw_model)
    mutation(raw)
    with pytest.raises(ParseException, match=path):
        validate_model(raw)


def test_validate_model_rejects_non_object():  # noqa: D103
    with pytest.raises(ParseException, match='expected an object'):
        validate_model([1, 2, 3])


def test_value_alphabet_membership():  # noqa: D103
    alphabet = ValueAlphabet(3)
    assert list(alphabet.values) == [0, 1, 2]
    assert 2 in alphabet
    assert 3 not in alphabet
    assert -1 not in alphabet
    assert True not in alphabet


def test_condition_set_index_of_unknown_name_raises():  # noqa: D103
    conditions = ConditionSet(['a', 'b'], [0.5, 0.5])
    assert conditions.index_of('b') == 1
    with pytest.raises(IndexOutOfRangeException, match="unknown condition 'c'"):
        conditions.index_of('c')


def test_model_arrays_are_read_only():  # noqa: D103
    model = load_worked_example_model()
    with pytest.raises(ValueError):
        model.probs[0] = 0.5
    with pytest.raises(ValueError):
        model.matrix.values[0, 0] = 1


def test_model_relation_reads_matrix_entries():  # noqa: D103
    model = load_worked_example_model()
    assert [model.relation(2, i) for i in range(5)] == [0, 1, 0, 1, 0]
    assert model.relation(0, 4) == 1


@pytest.mark.parametrize('symptom,condition', [(3, 0), (-1, 0), (0, 5)])
def test_model_relation_rejects_out_of_range_indices(symptom, condition):  # noqa: D103
    with pytest.raises(IndexOutOfRangeException):
        load_worked_example_model().relation(symptom, condition)


def test_model_symptom_index_resolves_names_and_indices():  # noqa: D103
    model = load_worked_example_model()
    assert model.symptom_index('d2') == 1
    assert model.symptom_index('2') == 2
    with pytest.raises(IndexOutOfRangeException, match="unknown symptom 'd9'"):
        model.symptom_index('d9')
    with pytest.raises(IndexOutOfRangeException, match='out of range'):
        model.symptom_index('3')


def test_model_symptom_index_prefers_names_over_indices():  # noqa: D103
    conditions = ConditionSet(['e1', 'e2'], [0.5, 0.5])
    matrix = DiagnosticMatrix([[0, 1], [1, 0]], ['1', '0'], ValueAlphabet(2))
    model = DiagnosisModel(conditions, matrix)
    assert model.symptom_index('0') == 1
    assert model.symptom_index('1') == 0


def test_model_to_dict_round_trips_through_validation():  # noqa: D103
    model = load_worked_example_model()
    assert validate_model(model.to_dict()) == model


def test_model_equality_compares_conditions_and_matrix(raw_model):  # noqa: D103
    first, second = validate_model(raw_model), validate_model(copy.deepcopy(raw_model))
    assert first == second
    raw_model['matrix'][0][0] = 1
    assert validate_model(raw_model) != first
