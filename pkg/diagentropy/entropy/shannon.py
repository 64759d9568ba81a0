#  License: Apache Software License 2.0

"""Shannon entropy and information of the condition set and of the partitions induced by symptoms."""
import math
from typing import Optional, Sequence

import numpy as np
from scipy.special import entr

from diagentropy.entropy.base import MeasureKind, MeasureValue, clamp_difference
from diagentropy.exceptions import (
    EmptyInputException,
    InvalidArgumentsException,
    NegativeProbabilityException,
    NotARefinementException,
)
from diagentropy.model import Block, DiagnosisModel, Partition


def _check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, (int, np.integer)) or base < 2:
        raise InvalidArgumentsException(f'the logarithm base must be an integer of at least 2, got {base}.')
    return int(base)


def _entropy(probs: np.ndarray, base: int) -> float:
    # entr(0) == 0, which implements the 0 log 0 := 0 convention
    return float(math.fsum(entr(probs)) / math.log(base))


def shannon_entropy(probs: Sequence[float], base: int = 2) -> MeasureValue:
    """Returns the Shannon entropy ``-Σ p log_base p`` of a list of probabilities.

    Zero entries are accepted and contribute nothing.

    Parameters
    ----------
    probs: Sequence[float]
        The probabilities.
    base: int, default=2
        The base of the logarithm, usually the size λ of the symptom value alphabet.

    Returns
    -------
    entropy: MeasureValue

    Examples
    --------
    >>> float(shannon_entropy([0.5, 0.5], base=2))
    1.0
    """
    base = _check_base(base)
    values = np.asarray(probs, dtype=float)
    if values.size == 0:
        raise EmptyInputException('cannot calculate the entropy of an empty probability list.')
    if (values < 0).any():
        raise NegativeProbabilityException(f'probabilities cannot be negative, got {values.tolist()}.')
    return MeasureValue(max(_entropy(values, base), 0.0), MeasureKind.SHANNON)


def shannon_uniform_entropy(n: int, base: int = 2) -> MeasureValue:
    """Returns the entropy ``log_base n`` of ``n`` equiprobable conditions."""
    base = _check_base(base)
    if n < 1:
        raise EmptyInputException('cannot calculate the entropy of an empty condition set.')
    return MeasureValue(math.log(n) / math.log(base), MeasureKind.SHANNON)


def shannon_block_entropy(block: Block, model: DiagnosisModel, base: Optional[int] = None) -> float:
    """Returns the contribution ``p_j H(Q_j)`` of a single block to the average entropy of a partition."""
    base = _check_base(model.alphabet.size if base is None else base)
    conditional = model.probs[list(block.members)] / block.probability
    return block.probability * _entropy(conditional, base)


def shannon_partition_entropy(
    partition: Partition, model: DiagnosisModel, base: Optional[int] = None
) -> MeasureValue:
    """Returns the average entropy ``Σ p_j H(Q_j)`` remaining once the condition is known up to a block.

    Parameters
    ----------
    partition: Partition
        The partition induced by the symptoms selected so far.
    model: DiagnosisModel
        The model providing the prior probabilities.
    base: int, default=None
        The base of the logarithm. Defaults to the alphabet size λ of the model.

    Returns
    -------
    entropy: MeasureValue
    """
    value = math.fsum(shannon_block_entropy(block, model, base) for block in partition.blocks)
    return MeasureValue(max(value, 0.0), MeasureKind.SHANNON)


def shannon_information(
    before: Partition, after: Partition, model: DiagnosisModel, base: Optional[int] = None
) -> MeasureValue:
    """Returns the information delivered by refining ``before`` into ``after``.

    With ``before`` the trivial partition and ``after`` induced by one symptom this is the information of that
    symptom. When ``before`` is induced by earlier selections it is the conditional information of the symptoms
    that turn it into ``after``.
    """
    if not after.is_refinement_of(before):
        raise NotARefinementException('the second partition does not refine the first one.')
    difference = float(shannon_partition_entropy(before, model, base)) - float(
        shannon_partition_entropy(after, model, base)
    )
    return MeasureValue(clamp_difference(difference), MeasureKind.SHANNON)
