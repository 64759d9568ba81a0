#  License: Apache Software License 2.0

"""Reading and writing model documents.

JSON is the primary format, its layout is described by ``schemas/model.schema.json``. CSV is accepted as a
convenience import: the first column holds the condition names, the second their probabilities and the remaining
columns the symptom values, with the symptom names in the header row.
"""
import io
import json
import logging
import math
import warnings
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from diagentropy.exceptions import InvalidArgumentsException, ParseException
from diagentropy.model import SUM_TOLERANCE, DiagnosisModel, validate_model

SIGNIFICANT_DIGITS = 12

logger = logging.getLogger(__name__)


def format_number(value: float) -> str:
    """Formats a number with twelve significant digits, the fixed precision of every document and report."""
    return f'{value:.{SIGNIFICANT_DIGITS}g}'


def canonical_float(value: float) -> float:
    """Rounds a number to twelve significant digits."""
    return float(format_number(value))


def _parse_json(text: str) -> Dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseException(f'invalid JSON: {exc.msg}', path=f'line {exc.lineno}, column {exc.colno}')


def _is_missing(value: Any) -> bool:
    return value is None or (isinstance(value, float) and math.isnan(value)) or str(value).strip() == ''


def _parse_csv(text: str, lambda_: Optional[int]) -> Dict[str, Any]:
    try:
        table = pd.read_csv(io.StringIO(text), header=None, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise ParseException('the document is empty', path='line 1')
    except pd.errors.ParserError as exc:
        raise ParseException(f'malformed CSV: {exc}')

    if table.shape[1] < 3:
        raise ParseException(
            'expected a condition column, a probability column and at least one symptom column', path='line 1'
        )
    header = [str(value).strip() for value in table.iloc[0]]
    symptoms = header[2:]
    for column, name in enumerate(symptoms, start=3):
        if name == '':
            raise ParseException('missing symptom name', path=f'line 1, column {column}')

    conditions: List[Dict[str, Any]] = []
    matrix: List[List[int]] = []
    for row_index in range(1, table.shape[0]):
        line = row_index + 1
        row = table.iloc[row_index].tolist()
        for column, value in enumerate(row, start=1):
            if _is_missing(value):
                raise ParseException('missing value', path=f'line {line}, column {column}')
        try:
            probability = float(row[1])
        except ValueError:
            raise ParseException(f'expected a probability, got {row[1]!r}', path=f'line {line}, column 2')
        values = []
        for column, value in enumerate(row[2:], start=3):
            try:
                values.append(int(value))
            except ValueError:
                raise ParseException(
                    f'expected an integer symptom value, got {value!r}', path=f'line {line}, column {column}'
                )
        conditions.append({'name': str(row[0]).strip(), 'p': probability})
        matrix.append(values)

    if lambda_ is None:
        lambda_ = max(2, 1 + max((value for row in matrix for value in row), default=1))
        warnings.warn(f'the alphabet size was not declared and has been inferred as {lambda_}.')
        logger.warning(f'inferred alphabet size {lambda_} from the largest symptom value')

    return {'lambda': lambda_, 'conditions': conditions, 'symptoms': symptoms, 'matrix': matrix}


def parse_model(
    text: str,
    format: str = 'json',
    lambda_: Optional[int] = None,
    renormalize: bool = False,
    sum_tolerance: float = SUM_TOLERANCE,
) -> DiagnosisModel:
    """Parses and validates a model document.

    Parameters
    ----------
    text: str
        The document text.
    format: str, default='json'
        Either ``'json'`` or ``'csv'``.
    lambda_: int, default=None
        The alphabet size of a CSV document. When omitted it is inferred as one more than the largest symptom
        value and a warning is emitted. JSON documents always declare it themselves.
    renormalize: bool, default=False
        Rescale the priors so they sum to one.
    sum_tolerance: float, default=1e-9
        Maximum allowed deviation of the sum of the priors from one.

    Returns
    -------
    model: DiagnosisModel

    Raises
    ------
    ParseException
        When the text is not a well-formed document. The offending path or line is reported.
    InvalidModelException
        When the document describes an invalid model.

    Examples
    --------
    >>> model = parse_model('{"lambda": 2, "conditions": [{"name": "e1", "p": 0.5}, {"name": "e2", "p": 0.5}], '
    ...                     '"symptoms": ["d1"], "matrix": [[0], [1]]}')
    >>> model.condition_count
    2
    """
    if format == 'json':
        raw = _parse_json(text)
    elif format == 'csv':
        raw = _parse_csv(text, lambda_)
    else:
        raise InvalidArgumentsException(f"unknown model format '{format}'. Please provide one of: ['json', 'csv'].")
    return validate_model(raw, renormalize=renormalize, sum_tolerance=sum_tolerance)


def read_document(path: Union[str, Path]) -> str:
    """Returns the text of a UTF-8 document, raising a ParseException when its bytes do not decode."""
    path = Path(path)
    try:
        return path.read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        raise ParseException(
            f'the document is not valid UTF-8 ({exc.reason} at byte {exc.start})', path=str(path)
        ) from exc


def read_model(
    path: Union[str, Path], lambda_: Optional[int] = None, renormalize: bool = False, format: Optional[str] = None
) -> DiagnosisModel:
    """Reads a model document from a file, as CSV when the file name ends in ``.csv`` and as JSON otherwise."""
    path = Path(path)
    if format is None:
        format = 'csv' if path.suffix.lower() == '.csv' else 'json'
    return parse_model(read_document(path), format=format, lambda_=lambda_, renormalize=renormalize)


def model_document(model: DiagnosisModel) -> Dict[str, Any]:
    """Returns the canonical document layout of a model, probabilities rounded to twelve significant digits."""
    document = model.to_dict()
    for condition in document['conditions']:
        condition['p'] = canonical_float(condition['p'])
    return document


def serialize_model(model: DiagnosisModel) -> str:
    """Serializes a model into a canonical JSON model document with sorted keys.

    Examples
    --------
    >>> from diagentropy.datasets import load_two_condition_model
    >>> print(serialize_model(load_two_condition_model()))  # doctest: +NORMALIZE_WHITESPACE
    {"conditions": [{"name": "e1", "p": 0.5}, {"name": "e2", "p": 0.5}], "lambda": 2,
     "matrix": [[0], [1]], "symptoms": ["d1"]}
    """
    return json.dumps(model_document(model), sort_keys=True)
