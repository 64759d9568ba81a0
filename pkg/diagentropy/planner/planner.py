#  License: Apache Software License 2.0

"""Greedy selection of symptoms by maximum conditional information.

At every step the symptom delivering the most information about the remaining conditions, given the outcomes of the
symptoms observed before, is selected. :func:`build_tree` applies this rule separately within every branch, so the
result is an adaptive diagnosis tree. :func:`select_symptom_set` applies it to the whole condition set, yielding a
fixed symptom sequence.
"""
import logging
from typing import AbstractSet, List, Optional, Tuple

from joblib import Parallel, delayed

from diagentropy.model import DiagnosisModel, Partition, refine_partition, trivial_partition
from diagentropy.planner.criterion import Criterion
from diagentropy.planner.result import PlanReport, PlanStep, evaluate_tree
from diagentropy.planner.tree import DecisionNode, DiagnosisTree, Node, make_leaf

POSITIVE_INFORMATION_THRESHOLD = 1e-12
TIE_TOLERANCE = 1e-12

logger = logging.getLogger(__name__)


def _candidate_information(partition: Partition, model: DiagnosisModel, criterion: Criterion, symptom: int) -> float:
    return criterion.information(partition, refine_partition(partition, model, symptom), model)


def select_next(
    partition: Partition,
    model: DiagnosisModel,
    criterion: Criterion,
    excluded: AbstractSet[int] = frozenset(),
    n_jobs: Optional[int] = None,
) -> Optional[Tuple[int, float]]:
    """Returns the symptom delivering the most conditional information for a partition.

    Symptoms that induced the partition are never candidates, their information is zero.

    Parameters
    ----------
    partition: Partition
        The partition induced by the symptoms observed so far. Within a tree this is the sub-partition of one node.
    model: DiagnosisModel
        The model the partition was built over.
    criterion: Criterion
        The information measure to maximize.
    excluded: AbstractSet[int], default=frozenset()
        Symptom indices that may not be selected.
    n_jobs: int, default=None
        The number of jobs evaluating candidates concurrently. Sequential evaluation when ``None`` or ``1``.
        The result does not depend on this setting.

    Returns
    -------
    selection: Optional[Tuple[int, float]]
        The index of the selected symptom and its information, or ``None`` when no symptom delivers more than
        ``POSITIVE_INFORMATION_THRESHOLD`` per unit of partition probability. Ties are broken in favour of the
        smallest symptom index.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> from diagentropy.model import trivial_partition
    >>> model = load_worked_example_model()
    >>> symptom, information = select_next(trivial_partition(model), model, Criterion())
    >>> symptom, round(information, 12)
    (1, 2.87)
    """
    candidates = [
        r for r in range(model.symptom_count) if r not in excluded and r not in partition.inducing_symptoms
    ]
    if n_jobs is not None and n_jobs != 1 and len(candidates) > 1:
        values = Parallel(n_jobs=n_jobs)(
            delayed(_candidate_information)(partition, model, criterion, r) for r in candidates
        )
    else:
        values = [_candidate_information(partition, model, criterion, r) for r in candidates]

    # thresholds apply per unit of block mass, sub-partitions keep absolute probabilities
    scale = partition.probability
    best: Optional[Tuple[int, float]] = None
    for symptom, value in zip(candidates, values):
        if best is None or value / scale > best[1] / scale + TIE_TOLERANCE:
            best = (symptom, value)

    if best is None or best[1] / scale <= POSITIVE_INFORMATION_THRESHOLD:
        return None
    return best


def _grow(
    partition: Partition, model: DiagnosisModel, criterion: Criterion, depth: int, n_jobs: Optional[int]
) -> Node:
    block = partition.blocks[0]
    if block.size == 1:
        return make_leaf(model, block.members, depth)

    selection = select_next(partition, model, criterion, n_jobs=n_jobs)
    if selection is None:
        logger.debug(f'no informative symptom left for block {block.members}, creating ambiguous leaf')
        return make_leaf(model, block.members, depth)

    symptom, information = selection
    logger.debug(
        f"selected symptom '{model.matrix.symptom_names[symptom]}' for block {block.members} "
        f'at depth {depth} delivering {information}'
    )
    refined = refine_partition(partition, model, symptom)
    branches = tuple(
        (sub_block.signature[-1], _grow(refined.restrict(j), model, criterion, depth + 1, n_jobs))
        for j, sub_block in enumerate(refined.blocks)
    )
    return DecisionNode(
        symptom=symptom, block=block.members, probability=block.probability, depth=depth, branches=branches
    )


def build_tree(
    model: DiagnosisModel, criterion: Optional[Criterion] = None, n_jobs: Optional[int] = None
) -> Tuple[DiagnosisTree, PlanReport]:
    """Builds an adaptive diagnosis tree by greedy selection of symptoms.

    Every node holding more than one condition observes the symptom with the most conditional information
    for its own block. Expansion stops at blocks holding a single condition (resolved leaves) and at blocks no
    remaining symptom can split (ambiguous leaves).

    Parameters
    ----------
    model: DiagnosisModel
        The model to plan a diagnosis for.
    criterion: Criterion, default=None
        The information measure to maximize. Defaults to the combinatorial-probabilistic criterion.
    n_jobs: int, default=None
        Passed on to :func:`select_next`.

    Returns
    -------
    tree: DiagnosisTree
        The diagnosis tree.
    report: PlanReport
        The additivity ledger and the cost metrics of the tree.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> model = load_worked_example_model()
    >>> tree, report = build_tree(model, Criterion.parse('cb'))
    >>> report.worst_case_depth, round(report.expected_test_count, 12)
    (3, 2.08)
    """
    if criterion is None:
        criterion = Criterion()
    root = _grow(trivial_partition(model), model, criterion, depth=0, n_jobs=n_jobs)
    tree = DiagnosisTree.for_model(root, model, criterion)
    report = evaluate_tree(tree, model, criterion)
    logger.info(
        f'built diagnosis tree using {criterion}: {len(tree.decision_nodes())} tests, '
        f'{report.ambiguous_leaves} ambiguous leaves, expected test count {report.expected_test_count}'
    )
    return tree, report


def select_symptom_set(model: DiagnosisModel, criterion: Optional[Criterion] = None) -> List[PlanStep]:
    """Selects a fixed symptom sequence by maximum conditional information on the whole condition set.

    Selection stops when the residual entropy is zero or when no remaining symptom adds information.

    Parameters
    ----------
    model: DiagnosisModel
        The model to select symptoms for.
    criterion: Criterion, default=None
        The information measure to maximize. Defaults to the combinatorial-probabilistic criterion.

    Returns
    -------
    steps: List[PlanStep]
        One step per selected symptom, in selection order, with its conditional information and the residual
        entropy after the step.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> model = load_worked_example_model()
    >>> [step.symptom_name for step in select_symptom_set(model)]
    ['d2', 'd3', 'd1']
    """
    if criterion is None:
        criterion = Criterion()
    partition = trivial_partition(model)
    steps: List[PlanStep] = []
    while not partition.is_singleton():
        selection = select_next(partition, model, criterion)
        if selection is None:
            break
        symptom, information = selection
        partition = refine_partition(partition, model, symptom)
        steps.append(
            PlanStep(
                step=len(steps) + 1,
                symptom=symptom,
                symptom_name=model.matrix.symptom_names[symptom],
                block=partition.universe,
                information=information,
                residual_entropy=criterion.entropy(partition, model),
            )
        )
        logger.debug(f"selected symptom '{model.matrix.symptom_names[symptom]}' delivering {information}")
    return steps
