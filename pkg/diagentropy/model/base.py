#  License: Apache Software License 2.0

"""Module containing the domain types of a multi-valued diagnosis model.

A diagnosis model combines a set of mutually exclusive system conditions, each with a prior probability,
and a diagnostic matrix holding the value every symptom takes for every condition.
"""
import logging
import math
import warnings
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import numpy as np

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

SUM_TOLERANCE = 1e-9

logger = logging.getLogger(__name__)


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _check_unique(names: Sequence[str], kind: str):
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateNameException(f"{kind} name '{name}' occurs more than once. Please use unique names.")
        seen.add(name)


class ConditionSet:
    """The set of mutually exclusive system conditions and their prior probabilities."""

    def __init__(self, names: Sequence[str], probs: Sequence[float], sum_tolerance: float = SUM_TOLERANCE):
        """Creates a new ConditionSet.

        Parameters
        ----------
        names: Sequence[str]
            Unique labels for the conditions.
        probs: Sequence[float]
            The prior probability of each condition, parallel to ``names``.
        sum_tolerance: float, default=1e-9
            Maximum allowed deviation of the sum of the priors from one.
        """
        if len(names) == 0:
            raise DimensionMismatchException('a condition set requires at least one condition.')
        if len(names) != len(probs):
            raise DimensionMismatchException(
                f'got {len(names)} condition names but {len(probs)} probabilities. '
                'Please provide one probability per condition.'
            )
        _check_unique(names, 'condition')

        for name, p in zip(names, probs):
            if not p > 0:
                raise ZeroOrNegativeProbabilityException(
                    f"condition '{name}' has probability {p}. "
                    'Every condition requires a strictly positive probability, please remove it explicitly instead.'
                )

        total = math.fsum(probs)
        if abs(total - 1) > sum_tolerance:
            raise ProbabilitySumOutOfToleranceException(
                f'condition probabilities sum to {total}, which deviates from 1 by more than {sum_tolerance}.'
            )

        self._names: Tuple[str, ...] = tuple(names)
        self._probs = _read_only(np.asarray(probs, dtype=float).copy())
        self._index = {name: i for i, name in enumerate(self._names)}

    @property
    def names(self) -> Tuple[str, ...]:  # noqa: D102
        return self._names

    @property
    def probs(self) -> np.ndarray:  # noqa: D102
        return self._probs

    def __len__(self):
        """Returns the number of conditions ``n``."""
        return len(self._names)

    def index_of(self, name: str) -> int:
        """Returns the position of the condition with the given name."""
        if name not in self._index:
            raise IndexOutOfRangeException(f"unknown condition '{name}'.")
        return self._index[name]

    def __eq__(self, other):
        """Establishes equality by comparing names and probabilities."""
        return (
            isinstance(other, ConditionSet)
            and self.names == other.names
            and np.array_equal(self.probs, other.probs)
        )

    def __repr__(self):
        """String representation of a ConditionSet."""
        return f'ConditionSet({dict(zip(self.names, self.probs.tolist()))})'


class ValueAlphabet:
    """The set of values ``{0, ..., λ-1}`` a symptom can take."""

    def __init__(self, size: int):
        """Creates a new ValueAlphabet holding ``size`` values."""
        if isinstance(size, bool) or not isinstance(size, (int, np.integer)) or size < 2:
            raise InvalidModelException(f'the value alphabet size must be an integer of at least 2, got {size}.')
        self.size = int(size)

    @property
    def values(self) -> range:  # noqa: D102
        return range(self.size)

    def __contains__(self, value) -> bool:
        """Returns whether a value belongs to the alphabet."""
        return isinstance(value, (int, np.integer)) and not isinstance(value, bool) and 0 <= value < self.size

    def __eq__(self, other):
        """Establishes equality by comparing the alphabet size."""
        return isinstance(other, ValueAlphabet) and self.size == other.size

    def __repr__(self):
        """String representation of a ValueAlphabet."""
        return f'ValueAlphabet(size={self.size})'


class DiagnosticMatrix:
    """The ``n x t`` grid of symptom values, row ``i`` describing condition ``i``, column ``r`` symptom ``r``."""

    def __init__(self, values: Sequence[Sequence[int]], symptom_names: Sequence[str], alphabet: ValueAlphabet):
        """Creates a new DiagnosticMatrix.

        Parameters
        ----------
        values: Sequence[Sequence[int]]
            The symptom values, one row per condition.
        symptom_names: Sequence[str]
            Unique labels for the symptoms, one per column.
        alphabet: ValueAlphabet
            The alphabet every matrix entry must belong to.
        """
        if len(symptom_names) == 0:
            raise DimensionMismatchException('a diagnostic matrix requires at least one symptom.')
        _check_unique(symptom_names, 'symptom')

        for i, row in enumerate(values):
            if len(row) != len(symptom_names):
                raise DimensionMismatchException(
                    f'matrix row {i} holds {len(row)} values but there are {len(symptom_names)} symptoms.'
                )
            for r, value in enumerate(row):
                if value not in alphabet:
                    raise MatrixValueOutOfAlphabetException(
                        f"matrix entry ({i}, {r}) equals {value}, which is not in {{0, ..., {alphabet.size - 1}}}."
                    )

        self._values = _read_only(np.asarray(values, dtype=int).reshape(len(values), len(symptom_names)))
        self._symptom_names: Tuple[str, ...] = tuple(symptom_names)
        self._index = {name: r for r, name in enumerate(self._symptom_names)}
        self.alphabet = alphabet

    @property
    def values(self) -> np.ndarray:  # noqa: D102
        return self._values

    @property
    def symptom_names(self) -> Tuple[str, ...]:  # noqa: D102
        return self._symptom_names

    @property
    def shape(self) -> Tuple[int, int]:  # noqa: D102
        return self._values.shape  # type: ignore

    def column(self, symptom: int) -> np.ndarray:
        """Returns the values of a single symptom for all conditions."""
        if not 0 <= symptom < self.shape[1]:
            raise IndexOutOfRangeException(f'symptom index {symptom} is out of range [0, {self.shape[1]}).')
        return self._values[:, symptom]

    def index_of(self, name: str) -> int:
        """Returns the column index of the symptom with the given name."""
        if name not in self._index:
            raise IndexOutOfRangeException(f"unknown symptom '{name}'.")
        return self._index[name]

    def __eq__(self, other):
        """Establishes equality by comparing values, names and alphabet."""
        return (
            isinstance(other, DiagnosticMatrix)
            and self.symptom_names == other.symptom_names
            and self.alphabet == other.alphabet
            and np.array_equal(self.values, other.values)
        )


class DiagnosisModel:
    """A multi-valued diagnosis model: conditions with priors and the diagnostic matrix relating them to symptoms.

    The crisp relation ``R(d_r / e_i)`` between symptoms and conditions is a plain lookup in the matrix.
    Instances are immutable and can be shared freely.

    Examples
    --------
    >>> from diagentropy.model import ConditionSet, DiagnosisModel, DiagnosticMatrix, ValueAlphabet
    >>> conditions = ConditionSet(names=['e1', 'e2'], probs=[0.5, 0.5])
    >>> matrix = DiagnosticMatrix(values=[[0], [1]], symptom_names=['d1'], alphabet=ValueAlphabet(2))
    >>> model = DiagnosisModel(conditions, matrix)
    >>> model.relation(symptom=0, condition=1)
    1
    """

    def __init__(self, conditions: ConditionSet, matrix: DiagnosticMatrix):
        """Creates a new DiagnosisModel, checking that the matrix holds one row per condition."""
        if matrix.shape[0] != len(conditions):
            raise DimensionMismatchException(
                f'the diagnostic matrix has {matrix.shape[0]} rows but there are {len(conditions)} conditions.'
            )
        self.conditions = conditions
        self.matrix = matrix

    @property
    def condition_count(self) -> int:  # noqa: D102
        return len(self.conditions)

    @property
    def symptom_count(self) -> int:  # noqa: D102
        return self.matrix.shape[1]

    @property
    def alphabet(self) -> ValueAlphabet:  # noqa: D102
        return self.matrix.alphabet

    @property
    def probs(self) -> np.ndarray:  # noqa: D102
        return self.conditions.probs

    def relation(self, symptom: int, condition: int) -> int:
        """Returns the value ``R(d_symptom / e_condition)`` of a symptom for a condition."""
        if not 0 <= condition < self.condition_count:
            raise IndexOutOfRangeException(
                f'condition index {condition} is out of range [0, {self.condition_count}).'
            )
        return int(self.matrix.column(symptom)[condition])

    def symptom_index(self, reference: str) -> int:
        """Resolves a symptom given by name, or by zero-based index when no symptom carries that name."""
        if reference in self.matrix.symptom_names:
            return self.matrix.index_of(reference)
        try:
            index = int(reference)
        except ValueError:
            raise IndexOutOfRangeException(
                f"unknown symptom '{reference}'. Please provide one of {list(self.matrix.symptom_names)}."
            )
        if not 0 <= index < self.symptom_count:
            raise IndexOutOfRangeException(f'symptom index {index} is out of range [0, {self.symptom_count}).')
        return index

    def to_dict(self) -> Dict[str, Any]:
        """Converts the model into the dictionary layout of a model document."""
        return {
            'lambda': self.alphabet.size,
            'conditions': [{'name': name, 'p': float(p)} for name, p in zip(self.conditions.names, self.probs)],
            'symptoms': list(self.matrix.symptom_names),
            'matrix': self.matrix.values.tolist(),
        }

    def __eq__(self, other):
        """Establishes equality by comparing conditions and matrix."""
        return isinstance(other, DiagnosisModel) and self.conditions == other.conditions and self.matrix == other.matrix

    def __repr__(self):
        """Returns a short textual summary of the model."""
        return (
            f'DiagnosisModel[conditions={self.condition_count}, symptoms={self.symptom_count}, '
            f'lambda={self.alphabet.size}]'
        )


def _require(raw: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in raw:
        raise ParseException(f"missing required field '{key}'", path=path)
    return raw[key]


def _require_list(value: Any, path: str) -> List[Any]:
    if not isinstance(value, (list, tuple)):
        raise ParseException(f'expected a list, got {type(value).__name__}', path=path)
    return list(value)


def _require_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise ParseException(f'expected a number, got {value!r}', path=path)
    return float(value)


def _require_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ParseException(f'expected an integer, got {value!r}', path=path)
    return int(value)


def validate_model(raw: Mapping[str, Any], renormalize: bool = False, sum_tolerance: float = SUM_TOLERANCE):
    """Validates unstructured model data and turns it into a DiagnosisModel.

    The expected layout is the one of a model document::

        {"lambda": 2,
         "conditions": [{"name": "e1", "p": 0.5}, {"name": "e2", "p": 0.5}],
         "symptoms": ["d1"],
         "matrix": [[0], [1]]}

    Probabilities are preserved verbatim unless ``renormalize`` is set.

    Parameters
    ----------
    raw: Mapping[str, Any]
        The parsed, unvalidated model data.
    renormalize: bool, default=False
        Rescale the (strictly positive) priors so they sum to one before checking the sum.
    sum_tolerance: float, default=1e-9
        Maximum allowed deviation of the sum of the priors from one.

    Returns
    -------
    model: DiagnosisModel
        The validated model.

    Raises
    ------
    ParseException
        When a required field is missing or has the wrong type. The offending path is reported.
    InvalidModelException
        When the data violates a model assumption: zero or negative probabilities, a probability sum outside
        of the tolerance, matrix values outside of the alphabet, mismatched dimensions or duplicate names.
    """
    if not isinstance(raw, Mapping):
        raise ParseException(f'expected an object, got {type(raw).__name__}', path='$')

    size = _require_int(_require(raw, 'lambda', '$'), '$.lambda')
    alphabet = ValueAlphabet(size)

    conditions = _require_list(_require(raw, 'conditions', '$'), '$.conditions')
    names, probs = [], []
    for i, condition in enumerate(conditions):
        path = f'$.conditions[{i}]'
        if not isinstance(condition, Mapping):
            raise ParseException('expected an object with fields "name" and "p"', path=path)
        names.append(str(_require(condition, 'name', path)))
        probs.append(_require_number(_require(condition, 'p', path), f'{path}.p'))

    symptoms = [str(s) for s in _require_list(_require(raw, 'symptoms', '$'), '$.symptoms')]

    rows = _require_list(_require(raw, 'matrix', '$'), '$.matrix')
    values = []
    for i, row in enumerate(rows):
        row = _require_list(row, f'$.matrix[{i}]')
        values.append([_require_int(value, f'$.matrix[{i}][{r}]') for r, value in enumerate(row)])

    if len(values) != len(names):
        raise DimensionMismatchException(
            f'the diagnostic matrix has {len(values)} rows but there are {len(names)} conditions.'
        )

    if renormalize and len(probs) > 0 and all(p > 0 for p in probs):
        total = math.fsum(probs)
        if total != 1:
            warnings.warn(f'condition probabilities summed to {total} and were rescaled to sum to 1.')
            logger.warning(f'renormalized condition probabilities (sum was {total})')
        probs = [p / total for p in probs]

    condition_set = ConditionSet(names, probs, sum_tolerance=sum_tolerance)
    matrix = DiagnosticMatrix(values, symptoms, alphabet)
    return DiagnosisModel(condition_set, matrix)
