#  License: Apache Software License 2.0

"""Exhaustive searches over small diagnosis models, used as reference values for the greedy planner."""
import itertools
import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

from diagentropy.exceptions import InstanceTooLargeException, InvalidArgumentsException
from diagentropy.model import DiagnosisModel, partition_for

EXHAUSTIVE_LIMIT = 8

logger = logging.getLogger(__name__)


def _check_size(model: DiagnosisModel, check_conditions: bool = True):
    if model.symptom_count > EXHAUSTIVE_LIMIT or (check_conditions and model.condition_count > EXHAUSTIVE_LIMIT):
        raise InstanceTooLargeException(
            f'exhaustive search is limited to {EXHAUSTIVE_LIMIT} conditions and {EXHAUSTIVE_LIMIT} symptoms, '
            f'got n={model.condition_count}, t={model.symptom_count}.'
        )


def exhaustive_optimal_tree(model: DiagnosisModel, depth_cap: Optional[int] = None) -> float:
    """Returns the smallest expected test count of any adaptive diagnosis tree.

    Trees are expanded until no symptom can split a leaf, so every tree considered separates the conditions as
    far as the full symptom set allows. A tree node costs the probability of reaching it. The minimum is found by
    recursion over the splitting symptoms of every block, memoized on the block and the remaining depth. Symptoms
    used higher up on a path are constant within the block, so they never split it again.

    Parameters
    ----------
    model: DiagnosisModel
        The model, with at most ``EXHAUSTIVE_LIMIT`` conditions and symptoms.
    depth_cap: int, default=None
        The largest number of tests allowed on any path. Defaults to the number of symptoms.

    Returns
    -------
    optimum: float
        The minimal expected test count, or ``math.inf`` when no tree within the depth cap separates the
        conditions as far as the full symptom set does.

    Raises
    ------
    InstanceTooLargeException
        When the model has more than ``EXHAUSTIVE_LIMIT`` conditions or symptoms.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> round(exhaustive_optimal_tree(load_worked_example_model()), 12)
    2.08
    """
    _check_size(model)
    if depth_cap is None:
        depth_cap = model.symptom_count
    if isinstance(depth_cap, bool) or not isinstance(depth_cap, int) or depth_cap < 0:
        raise InvalidArgumentsException(f'the depth cap must be a non-negative integer, got {depth_cap!r}.')

    probs = model.probs.tolist()
    columns = [model.matrix.column(r).tolist() for r in range(model.symptom_count)]

    def _split(block: Tuple[int, ...], symptom: int) -> Tuple[Tuple[int, ...], ...]:
        groups: dict = {}
        for i in block:
            groups.setdefault(columns[symptom][i], []).append(i)
        return tuple(tuple(groups[value]) for value in sorted(groups))

    @lru_cache(maxsize=None)
    def _cost(block: Tuple[int, ...], remaining: int) -> float:
        splits = [_split(block, r) for r in range(model.symptom_count)]
        splits = [children for children in splits if len(children) > 1]
        if not splits:
            return 0.0
        if remaining == 0:
            return math.inf
        probability = math.fsum(probs[i] for i in block)
        return min(
            probability + math.fsum(_cost(child, remaining - 1) for child in children) for children in splits
        )

    optimum = _cost(tuple(range(model.condition_count)), depth_cap)
    logger.debug(f'exhaustive search evaluated {_cost.cache_info().currsize} block states, optimum {optimum}')
    return optimum


def exhaustive_minimal_symptom_set(model: DiagnosisModel) -> Tuple[int, ...]:
    """Returns the smallest symptom set separating the conditions as far as all symptoms together do.

    Among sets of equal size the lexicographically smallest one is returned.

    Raises
    ------
    InstanceTooLargeException
        When the model has more than ``EXHAUSTIVE_LIMIT`` symptoms.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> exhaustive_minimal_symptom_set(load_worked_example_model())
    (0, 1, 2)
    """
    _check_size(model, check_conditions=False)
    target = partition_for(model, range(model.symptom_count)).as_set_family()
    for size in range(model.symptom_count + 1):
        for symptoms in itertools.combinations(range(model.symptom_count), size):
            if partition_for(model, symptoms).as_set_family() == target:
                return symptoms
    return tuple(range(model.symptom_count))
