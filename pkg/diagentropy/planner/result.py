#  License: Apache Software License 2.0

"""Module containing the plan report of a diagnosis tree and the metrics it is made of."""
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
import plotly.graph_objects as go

from diagentropy.entropy import MeasureKind, hb_partition, shannon_partition_entropy
from diagentropy.exceptions import InvalidArgumentsException, TreeModelMismatchException
from diagentropy.model import DiagnosisModel, Partition, refine_partition, trivial_partition
from diagentropy.planner.criterion import Criterion
from diagentropy.planner.tree import DecisionNode, DiagnosisTree, LeafNode, LeafStatus, Node
from diagentropy.plots import ledger_plot


@dataclass(frozen=True)
class PlanStep:
    """A single entry of an additivity ledger.

    Attributes
    ----------
    step: int
        One-based position of the entry in the ledger.
    symptom: int
        Index of the observed symptom.
    symptom_name: str
        Name of the observed symptom.
    block: Tuple[int, ...]
        The conditions the symptom was observed for.
    information: float
        The conditional information delivered by observing the symptom.
    residual_entropy: float
        The entropy remaining after the step.
    """

    step: int
    symptom: int
    symptom_name: str
    block: Tuple[int, ...]
    information: float
    residual_entropy: float


def _ledger_frame(steps: List[PlanStep], condition_names: Tuple[str, ...]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                'step': step.step,
                'symptom': step.symptom_name,
                'conditions': ','.join(condition_names[i] for i in step.block),
                'information': step.information,
                'residual_entropy': step.residual_entropy,
            }
            for step in steps
        ],
        columns=['step', 'symptom', 'conditions', 'information', 'residual_entropy'],
    )


class PlanReport:
    """Contains the additivity ledger and the cost metrics of a diagnosis tree and adds plotting functionality."""

    def __init__(
        self,
        criterion: Criterion,
        condition_names: Tuple[str, ...],
        steps: List[PlanStep],
        path_steps: List[PlanStep],
        initial_entropy: float,
        expected_test_count: float,
        worst_case_depth: int,
        residual_hb: float,
        residual_shannon: float,
        resolved_leaves: int,
        ambiguous_leaves: int,
    ):
        """Creates a new PlanReport instance.

        Parameters
        ----------
        criterion: Criterion
            The criterion the ledger is expressed in.
        condition_names: Tuple[str, ...]
            Names of the conditions of the model.
        steps: List[PlanStep]
            The global ledger: one entry per test node of the tree, in pre-order.
        path_steps: List[PlanStep]
            The ledger along the root-to-leaf path ending in the most probable leaf.
        initial_entropy: float
            The entropy before any symptom is observed.
        expected_test_count: float
            The probability-weighted number of tests performed until reaching a leaf.
        worst_case_depth: int
            The largest number of tests performed on any path.
        residual_hb: float
            The combinatorial-probabilistic entropy of the leaf partition.
        residual_shannon: float
            The Shannon entropy of the leaf partition.
        resolved_leaves: int
            The number of leaves holding a single condition.
        ambiguous_leaves: int
            The number of leaves holding multiple conditions.
        """
        self.criterion = criterion
        self.condition_names = condition_names
        self.steps = steps
        self.path_steps = path_steps
        self.initial_entropy = initial_entropy
        self.expected_test_count = expected_test_count
        self.worst_case_depth = worst_case_depth
        self.residual_hb = residual_hb
        self.residual_shannon = residual_shannon
        self.resolved_leaves = resolved_leaves
        self.ambiguous_leaves = ambiguous_leaves

    @property
    def residual_entropy(self) -> float:
        """The entropy of the leaf partition, measured with the report criterion."""
        return self.residual_shannon if self.criterion.measure_kind == MeasureKind.SHANNON else self.residual_hb

    @property
    def total_information(self) -> float:  # noqa: D102
        return math.fsum(step.information for step in self.steps)

    @property
    def entropy_reduction(self) -> float:
        """The drop from the initial to the residual entropy, equal to the total information."""
        return self.initial_entropy - self.residual_entropy

    @property
    def data(self) -> pd.DataFrame:  # noqa: D102
        return _ledger_frame(self.steps, self.condition_names)

    @property
    def path_data(self) -> pd.DataFrame:  # noqa: D102
        return _ledger_frame(self.path_steps, self.condition_names)

    def to_dict(self) -> Dict[str, Any]:
        """Returns the report as a dictionary of plain values."""
        return {
            'criterion': self.criterion.kind.value,
            'initial_entropy': self.initial_entropy,
            'expected_test_count': self.expected_test_count,
            'worst_case_depth': self.worst_case_depth,
            'residual_entropy': self.residual_entropy,
            'residual_hb': self.residual_hb,
            'residual_shannon': self.residual_shannon,
            'total_information': self.total_information,
            'resolved_leaves': self.resolved_leaves,
            'ambiguous_leaves': self.ambiguous_leaves,
            'steps': [asdict(step) for step in self.steps],
            'path_steps': [asdict(step) for step in self.path_steps],
        }

    def plot(self, kind: str = 'ledger', *args, **kwargs) -> go.Figure:
        """Renders plots of the plan report.

        This function will return a :class:`plotly.graph_objects.Figure` object.
        The following kinds of plots are available:

        - ``ledger``: the information delivered by each test node as bars, with the residual entropy after each
          step as a line.
        - ``path``: the same for the tests on the path to the most probable leaf.

        Parameters
        ----------
        kind: str, default='ledger'
            The kind of plot to render.

        Examples
        --------
        >>> from diagentropy import build_tree, load_worked_example_model
        >>> tree, report = build_tree(load_worked_example_model())
        >>> report.plot(kind='ledger').show()
        """
        if kind == 'ledger':
            return ledger_plot(self.data, self.initial_entropy, title='Information per test node', **kwargs)
        elif kind == 'path':
            return ledger_plot(
                self.path_data, self.initial_entropy, title='Information along the most probable path', **kwargs
            )
        else:
            raise InvalidArgumentsException(f"unknown plot kind '{kind}'. Please provide one of: ['ledger', 'path'].")

    def __repr__(self):
        """Returns a short textual summary of the report."""
        return (
            f'PlanReport[criterion={self.criterion.kind.value}, expected_test_count={self.expected_test_count}, '
            f'worst_case_depth={self.worst_case_depth}, residual_entropy={self.residual_entropy}]'
        )


def validate_tree(tree: DiagnosisTree, model: DiagnosisModel):
    """Checks that a tree describes a diagnosis over a model.

    The tree must use the conditions, symptoms and alphabet of the model, its root must hold every condition, no
    symptom may repeat on a path and the branches of every node must be exactly the value classes of its symptom
    within its block.

    Raises
    ------
    TreeModelMismatchException
        When any of these conditions is violated.
    """
    if tree.condition_names != model.conditions.names:
        raise TreeModelMismatchException(
            f'tree conditions {list(tree.condition_names)} do not match model conditions '
            f'{list(model.conditions.names)}.'
        )
    if tree.symptom_names != model.matrix.symptom_names:
        raise TreeModelMismatchException(
            f'tree symptoms {list(tree.symptom_names)} do not match model symptoms {list(model.matrix.symptom_names)}.'
        )
    if tree.alphabet_size != model.alphabet.size:
        raise TreeModelMismatchException(
            f'tree alphabet size {tree.alphabet_size} does not match model alphabet size {model.alphabet.size}.'
        )
    if tree.root.block != tuple(range(model.condition_count)):
        raise TreeModelMismatchException('the root of the tree does not hold every condition of the model.')

    def _check(node: Node, depth: int, used: Tuple[int, ...]):
        if node.depth != depth:
            raise TreeModelMismatchException(f'node for {list(node.block)} has depth {node.depth}, expected {depth}.')
        if isinstance(node, LeafNode):
            return
        if not 0 <= node.symptom < model.symptom_count or node.symptom in used:
            raise TreeModelMismatchException(
                f'symptom index {node.symptom} cannot be observed at the node for {list(node.block)}.'
            )
        column = model.matrix.column(node.symptom)
        groups: Dict[int, List[int]] = {}
        for i in node.block:
            groups.setdefault(int(column[i]), []).append(i)
        expected = [(value, tuple(groups[value])) for value in sorted(groups)]
        actual = [(value, child.block) for value, child in node.branches]
        if expected != actual:
            raise TreeModelMismatchException(
                f"branches of the node observing '{model.matrix.symptom_names[node.symptom]}' do not match the "
                f'model: expected {expected}, got {actual}.'
            )
        for _, child in node.branches:
            _check(child, depth + 1, used + (node.symptom,))

    _check(tree.root, 0, ())


def _partition(model: DiagnosisModel, blocks: List[Tuple[int, ...]]) -> Partition:
    return Partition.from_blocks(model, blocks)


def _global_ledger(tree: DiagnosisTree, model: DiagnosisModel, criterion: Criterion) -> List[PlanStep]:
    frontier: List[Tuple[int, ...]] = [tree.root.block]
    steps: List[PlanStep] = []
    for node in tree.decision_nodes():
        position = frontier.index(node.block)
        children = [child.block for _, child in node.branches]
        frontier[position : position + 1] = children
        information = criterion.information(_partition(model, [node.block]), _partition(model, children), model)
        steps.append(
            PlanStep(
                step=len(steps) + 1,
                symptom=node.symptom,
                symptom_name=model.matrix.symptom_names[node.symptom],
                block=node.block,
                information=information,
                residual_entropy=criterion.entropy(_partition(model, frontier), model),
            )
        )
    return steps


def _path_nodes(tree: DiagnosisTree, leaf: LeafNode) -> List[DecisionNode]:
    def _find(node: Node, path: List[DecisionNode]) -> Optional[List[DecisionNode]]:
        if isinstance(node, LeafNode):
            return path if node.block == leaf.block else None
        for _, child in node.branches:
            if set(leaf.block).issubset(child.block):
                return _find(child, path + [node])
        return None

    nodes = _find(tree.root, [])
    if nodes is None:
        raise InvalidArgumentsException(f'the tree has no leaf holding {list(leaf.block)}.')
    return nodes


def most_probable_leaf(tree: DiagnosisTree) -> LeafNode:
    """Returns the leaf with the largest probability, the first one in pre-order on ties."""
    leaves = tree.leaves()
    best = leaves[0]
    for leaf in leaves[1:]:
        if leaf.probability > best.probability:
            best = leaf
    return best


def path_ledger(
    tree: DiagnosisTree,
    model: DiagnosisModel,
    criterion: Optional[Criterion] = None,
    leaf: Optional[LeafNode] = None,
) -> List[PlanStep]:
    """Returns the additivity ledger of the symptoms observed on the path to a leaf.

    The symptoms are applied in path order to the whole condition set, so the step informations sum up to the
    information of the full symptom set of the path.

    Parameters
    ----------
    tree: DiagnosisTree
        The diagnosis tree.
    model: DiagnosisModel
        The model the tree was built over.
    criterion: Criterion, default=None
        The information measure. Defaults to the criterion of the tree, or the combinatorial one.
    leaf: LeafNode, default=None
        The leaf ending the path. Defaults to the most probable leaf.

    Returns
    -------
    steps: List[PlanStep]
        One step per symptom on the path.
    """
    criterion = criterion or tree.criterion or Criterion()
    leaf = leaf or most_probable_leaf(tree)
    partition = trivial_partition(model)
    steps: List[PlanStep] = []
    for node in _path_nodes(tree, leaf):
        refined = refine_partition(partition, model, node.symptom)
        steps.append(
            PlanStep(
                step=len(steps) + 1,
                symptom=node.symptom,
                symptom_name=model.matrix.symptom_names[node.symptom],
                block=node.block,
                information=criterion.information(partition, refined, model),
                residual_entropy=criterion.entropy(refined, model),
            )
        )
        partition = refined
    return steps


def evaluate_tree(tree: DiagnosisTree, model: DiagnosisModel, criterion: Optional[Criterion] = None) -> PlanReport:
    """Recomputes the ledger and the cost metrics of a diagnosis tree over a model.

    Parameters
    ----------
    tree: DiagnosisTree
        The diagnosis tree to evaluate.
    model: DiagnosisModel
        The model the tree was built over.
    criterion: Criterion, default=None
        The measure of the ledger. Defaults to the criterion of the tree, or the combinatorial one.

    Returns
    -------
    report: PlanReport
        The recomputed report. Leaf probabilities are taken from the model, not from the tree.

    Raises
    ------
    TreeModelMismatchException
        When the tree does not describe a diagnosis over the model.
    """
    validate_tree(tree, model)
    criterion = criterion or tree.criterion or Criterion()

    leaves = tree.leaves()
    leaf_partition = _partition(model, [leaf.block for leaf in leaves])
    if not leaf_partition.validate(model):
        raise TreeModelMismatchException('the leaves of the tree do not partition the conditions of the model.')

    expected_test_count = math.fsum(
        block.probability * leaf.depth for block, leaf in zip(leaf_partition.blocks, leaves)
    )
    return PlanReport(
        criterion=criterion,
        condition_names=model.conditions.names,
        steps=_global_ledger(tree, model, criterion),
        path_steps=path_ledger(tree, model, criterion),
        initial_entropy=criterion.entropy(trivial_partition(model), model),
        expected_test_count=expected_test_count,
        worst_case_depth=max(leaf.depth for leaf in leaves),
        residual_hb=float(hb_partition(leaf_partition)),
        residual_shannon=float(shannon_partition_entropy(leaf_partition, model, criterion.shannon_base)),
        resolved_leaves=sum(leaf.status == LeafStatus.RESOLVED for leaf in leaves),
        ambiguous_leaves=sum(leaf.status == LeafStatus.AMBIGUOUS for leaf in leaves),
    )
