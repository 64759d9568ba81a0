#  License: Apache Software License 2.0

"""Tests for reading and writing model documents."""
import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import diagentropy.documents as documents
from diagentropy.datasets import load_worked_example_model
from diagentropy.documents import canonical_float, format_number, parse_model, read_model, serialize_model
from diagentropy.exceptions import InvalidArgumentsException, ParseException, ProbabilitySumOutOfToleranceException
from diagentropy.oracle import InstanceSpec, generate_instance

WORKED_EXAMPLE_CSV = """condition,p,d1,d2,d3
e1,0.05,0,0,0
e2,0.05,0,0,1
e3,0.84,0,1,0
e4,0.03,0,1,1
e5,0.03,1,0,0
"""


def test_parse_json_model():  # noqa: D103
    text = json.dumps(load_worked_example_model().to_dict())
    model = parse_model(text)
    assert model.condition_count == 5
    assert model.probs[2] == 0.84


def test_parse_truncated_json_reports_position():  # noqa: D103
    with pytest.raises(ParseException, match=r'line 1, column \d+: invalid JSON'):
        parse_model('{"lambda": 2, "conditions": [')


def test_parse_json_reports_failing_field():  # noqa: D103
    text = '{"lambda": 2, "conditions": [{"name": "e1"}], "symptoms": ["d1"], "matrix": [[0]]}'
    with pytest.raises(ParseException, match=r"\$.conditions\[0\]: missing required field 'p'"):
        parse_model(text)


def test_parse_csv_model_with_declared_alphabet():  # noqa: D103
    model = parse_model(WORKED_EXAMPLE_CSV, format='csv', lambda_=2)
    assert model == load_worked_example_model()


def test_parse_csv_model_infers_alphabet_with_warning():  # noqa: D103
    text = 'condition,p,d1,d2\ne1,0.5,0,2\ne2,0.5,1,0\n'
    with pytest.warns(UserWarning, match='inferred as 3'):
        model = parse_model(text, format='csv')
    assert model.alphabet.size == 3


def test_parse_csv_model_infers_binary_alphabet_for_constant_columns():  # noqa: D103
    with pytest.warns(UserWarning, match='inferred as 2'):
        model = parse_model('condition,p,d1\ne1,1.0,0\n', format='csv')
    assert model.alphabet.size == 2


def test_parse_csv_tolerates_spaces_after_separators():  # noqa: D103
    model = parse_model('condition, p, d1\ne1, 0.5, 0\ne2, 0.5, 1\n', format='csv', lambda_=2)
    assert model.matrix.symptom_names == ('d1',)
    assert model.conditions.names == ('e1', 'e2')


@pytest.mark.parametrize(
    'text,message',
    [
        ('', 'line 1: the document is empty'),
        ('condition,p\ne1,1.0\n', 'line 1: expected a condition column'),
        ('condition,p,d1\ne1,x,0\n', "line 2, column 2: expected a probability, got 'x'"),
        ('condition,p,d1\ne1,1.0,yes\n', "line 2, column 3: expected an integer symptom value, got 'yes'"),
        ('condition,p,d1,d2\ne1,1.0,0,\n', 'line 2, column 4: missing value'),
        ('condition,p,\ne1,1.0,0\n', 'line 1, column 3: missing symptom name'),
    ],
)
def test_parse_csv_reports_offending_line(text, message):  # noqa: D103
    with pytest.raises(ParseException, match=message):
        parse_model(text, format='csv', lambda_=2)


def test_parse_model_rejects_unknown_format():  # noqa: D103
    with pytest.raises(InvalidArgumentsException, match="unknown model format 'xml'"):
        parse_model('<model/>', format='xml')


def test_parse_model_validates_probabilities():  # noqa: D103
    text = '{"lambda": 2, "conditions": [{"name": "e1", "p": 0.4}], "symptoms": ["d1"], "matrix": [[0]]}'
    with pytest.raises(ProbabilitySumOutOfToleranceException):
        parse_model(text)
    assert parse_model(text, renormalize=True).probs.tolist() == [1.0]


def test_read_model_selects_format_by_suffix(tmp_path):  # noqa: D103
    csv_path = tmp_path / 'model.csv'
    csv_path.write_text(WORKED_EXAMPLE_CSV)
    json_path = tmp_path / 'model.json'
    json_path.write_text(serialize_model(load_worked_example_model()))
    assert read_model(csv_path, lambda_=2) == read_model(json_path)


def test_read_model_raises_for_missing_file(tmp_path):  # noqa: D103
    with pytest.raises(OSError):
        read_model(tmp_path / 'missing.json')


def test_read_model_raises_for_invalid_utf8(tmp_path):  # noqa: D103
    path = tmp_path / 'model.csv'
    path.write_bytes(b'condition,p,d1\ne1,1,\xff\n')
    with pytest.raises(ParseException, match='not valid UTF-8') as exc_info:
        read_model(path)
    assert exc_info.value.path == str(path)


def test_serialize_model_is_canonical():  # noqa: D103
    text = serialize_model(load_worked_example_model())
    assert text.startswith('{"conditions": [{"name": "e1", "p": 0.05}')
    assert list(json.loads(text)) == ['conditions', 'lambda', 'matrix', 'symptoms']


def test_format_number_uses_twelve_significant_digits():  # noqa: D103
    assert format_number(4.0) == '4'
    assert format_number(2.87 + 1e-15) == '2.87'
    assert format_number(1 / 3) == '0.333333333333'
    assert canonical_float(0.1 + 0.2) == 0.3


@settings(max_examples=50, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=12),
    t=st.integers(min_value=1, max_value=6),
    lambda_=st.integers(min_value=2, max_value=5),
    seed=st.integers(min_value=0, max_value=2**32),
)
def test_model_documents_round_trip(n, t, lambda_, seed):  # noqa: D103
    model = generate_instance(InstanceSpec(n=n, t=t, lambda_=lambda_, seed=seed))
    text = serialize_model(model)
    parsed = parse_model(text)

    assert parsed.conditions.names == model.conditions.names
    assert parsed.matrix == model.matrix
    assert np.allclose(parsed.probs, model.probs, rtol=1e-11, atol=0)
    assert serialize_model(parsed) == text


def test_serialized_model_has_the_documented_fields():  # noqa: D103
    schema = json.loads((Path(documents.__file__).parent / 'schemas' / 'model.schema.json').read_text())
    document = json.loads(serialize_model(load_worked_example_model()))
    assert set(document) == set(schema['required'])
    assert all(set(condition) == {'name', 'p'} for condition in document['conditions'])
