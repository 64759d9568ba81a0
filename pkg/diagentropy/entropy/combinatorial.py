#  License: Apache Software License 2.0

"""The combinatorial-probabilistic diagnostic entropy ``H_B`` and information ``J_B``.

``H_B`` is the sum of the probabilities of all unordered pairs of conditions that still need to be told apart.
For a partition it reduces to ``Σ p_j (n_j - 1)``, so it can be evaluated from the prior probabilities without
computing conditional probabilities. ``J_B`` is the drop in ``H_B`` caused by selecting symptoms, which equals the
probability mass of the condition pairs the selection separates.

The measures accept unnormalized positive weights wherever the formulas allow, so linearity can be checked directly.
"""
import math
from typing import Sequence, Tuple

import numpy as np

from diagentropy.entropy.base import MeasureKind, MeasureValue, clamp_difference
from diagentropy.exceptions import (
    EmptyInputException,
    InvalidBlockException,
    NonpositiveWeightException,
    NotARefinementException,
)
from diagentropy.model import DiagnosisModel, Partition


def _check_weights(weights: Sequence[float]) -> np.ndarray:
    values = np.asarray(weights, dtype=float)
    if values.size == 0:
        raise EmptyInputException('cannot calculate the entropy of an empty weight list.')
    if not (values > 0).all():
        raise NonpositiveWeightException(f'all weights must be strictly positive, got {values.tolist()}.')
    return values


def hb_pairwise(weights: Sequence[float]) -> MeasureValue:
    """Returns ``Σ_{i<j} (w_i + w_j)``, the summed weight of all unordered pairs, by explicit enumeration.

    Examples
    --------
    >>> float(hb_pairwise([0.5, 0.5]))
    1.0
    """
    values = _check_weights(weights).tolist()
    n = len(values)
    total = math.fsum(values[i] + values[j] for i in range(n - 1) for j in range(i + 1, n))
    return MeasureValue(total, MeasureKind.COMBINATORIAL)


def hb_closed(weights: Sequence[float]) -> MeasureValue:
    """Returns the closed form ``(n - 1) Σ w_i`` of :func:`hb_pairwise`."""
    values = _check_weights(weights)
    return MeasureValue((values.size - 1) * math.fsum(values.tolist()), MeasureKind.COMBINATORIAL)


def hb_block(probability: float, size: int) -> MeasureValue:
    """Returns the contribution ``p_j (n_j - 1)`` of one block of a partition."""
    if not probability > 0 or size < 1:
        raise InvalidBlockException(
            f'a block requires a positive probability and at least one member, got p={probability}, n={size}.'
        )
    return MeasureValue(probability * (size - 1), MeasureKind.COMBINATORIAL)


def hb_partition(partition: Partition) -> MeasureValue:
    """Returns the remaining uncertainty ``Σ_j p_j (n_j - 1)`` of a partition.

    For the trivial partition of a normalized model this equals ``n - 1``, for the singleton partition it is zero.
    """
    value = math.fsum(float(hb_block(block.probability, block.size)) for block in partition.blocks)
    return MeasureValue(value, MeasureKind.COMBINATORIAL)


def jb_information(before: Partition, after: Partition) -> MeasureValue:
    """Returns the information ``H_B(before) - H_B(after)`` delivered by refining ``before`` into ``after``.

    Parameters
    ----------
    before: Partition
        The partition induced by the symptoms selected earlier (the trivial partition for a first selection).
    after: Partition
        A refinement of ``before``.

    Returns
    -------
    information: MeasureValue
        The (conditional) combinatorial-probabilistic information, never negative.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> from diagentropy.model import induce_partition, trivial_partition
    >>> model = load_worked_example_model()
    >>> round(float(jb_information(trivial_partition(model), induce_partition(model, 1))), 12)
    2.87
    """
    if not after.is_refinement_of(before):
        raise NotARefinementException('the second partition does not refine the first one.')
    difference = float(hb_partition(before)) - float(hb_partition(after))
    return MeasureValue(clamp_difference(difference), MeasureKind.COMBINATORIAL)


def jb_pairwise_oracle(model: DiagnosisModel, before: Partition, after: Partition) -> MeasureValue:
    """Returns the summed probability of every condition pair that shares a block in ``before`` but not in ``after``.

    This enumerates pairs directly and is independent of the block formulas, so it serves to verify
    :func:`jb_information`.
    """
    if not after.is_refinement_of(before):
        raise NotARefinementException('the second partition does not refine the first one.')
    probs = model.probs.tolist()
    old, new = before.membership(), after.membership()
    covered = sorted(old)
    total = math.fsum(
        probs[a] + probs[b]
        for x, a in enumerate(covered)
        for b in covered[x + 1 :]
        if old[a] == old[b] and new[a] != new[b]
    )
    return MeasureValue(total, MeasureKind.COMBINATORIAL)


def jb_set_information(partition: Partition) -> MeasureValue:
    """Returns the information ``Σ_j n_j (1 - p_j)`` of the symptom set that induced a complete partition."""
    value = math.fsum(block.size * (1 - block.probability) for block in partition.blocks)
    return MeasureValue(max(value, 0.0), MeasureKind.COMBINATORIAL)


def jb_dual_forms(partition: Partition) -> Tuple[float, float]:
    """Returns the closed forms ``Σ n_j (1 - p_j)`` and ``Σ p_j (n - n_j)`` of the information of a full partition.

    The two are equal when the block probabilities sum to one.
    """
    n = partition.condition_count
    first = math.fsum(block.size * (1 - block.probability) for block in partition.blocks)
    second = math.fsum(block.probability * (n - block.size) for block in partition.blocks)
    return first, second


def jb_conditional_forms(before: Partition, after: Partition) -> Tuple[float, float]:
    """Returns both closed forms of the conditional information of refining ``before`` into ``after``.

    With blocks ``j`` of ``before`` and their sub-blocks ``jl`` in ``after`` these are
    ``Σ_j Σ_l n_jl (p_j - p_jl)`` and ``Σ_j Σ_l p_jl (n_j - n_jl)``.
    """
    if not after.is_refinement_of(before):
        raise NotARefinementException('the second partition does not refine the first one.')
    parent = before.membership()
    first, second = [], []
    for sub_block in after.blocks:
        block = before.blocks[parent[sub_block.members[0]]]
        first.append(sub_block.size * (block.probability - sub_block.probability))
        second.append(sub_block.probability * (block.size - sub_block.size))
    return math.fsum(first), math.fsum(second)
