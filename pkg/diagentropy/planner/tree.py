#  License: Apache Software License 2.0

"""Module containing the diagnosis tree and the stepwise execution of a diagnosis on it."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from diagentropy.exceptions import (
    ContradictoryObservationException,
    InvalidArgumentsException,
    ValueOutOfAlphabetException,
)
from diagentropy.model import DiagnosisModel
from diagentropy.planner.criterion import Criterion


class LeafStatus(str, Enum):
    """An enum indicating whether a leaf identifies a single condition.

    RESOLVED: the leaf holds exactly one condition.
    AMBIGUOUS: the leaf holds several conditions no available symptom can tell apart.
    """

    RESOLVED = 'resolved'
    AMBIGUOUS = 'ambiguous'


@dataclass(frozen=True)
class LeafNode:
    """A leaf of a diagnosis tree, holding the conditions that remain once the diagnosis reaches it.

    Attributes
    ----------
    block: Tuple[int, ...]
        The sorted indices of the remaining conditions.
    probability: float
        The prior probability of reaching the leaf.
    posterior: Tuple[float, ...]
        The conditional probability of each remaining condition, parallel to ``block``.
    depth: int
        The number of tests performed before reaching the leaf.
    """

    block: Tuple[int, ...]
    probability: float
    posterior: Tuple[float, ...]
    depth: int

    @property
    def status(self) -> LeafStatus:  # noqa: D102
        return LeafStatus.RESOLVED if len(self.block) == 1 else LeafStatus.AMBIGUOUS

    @property
    def is_leaf(self) -> bool:  # noqa: D102
        return True


@dataclass(frozen=True)
class DecisionNode:
    """An internal node of a diagnosis tree: observe a symptom and follow the edge labeled with its value.

    Attributes
    ----------
    symptom: int
        Index of the symptom to observe.
    block: Tuple[int, ...]
        The sorted indices of the conditions that remain when the node is reached.
    probability: float
        The prior probability of reaching the node.
    depth: int
        The number of tests performed before reaching the node.
    branches: Tuple[Tuple[int, Node], ...]
        One ``(value, child)`` pair per symptom value realized within ``block``, by ascending value.
    """

    symptom: int
    block: Tuple[int, ...]
    probability: float
    depth: int
    branches: Tuple[Tuple[int, 'Node'], ...]

    @property
    def is_leaf(self) -> bool:  # noqa: D102
        return False

    @property
    def values(self) -> Tuple[int, ...]:  # noqa: D102
        return tuple(value for value, _ in self.branches)

    def child(self, value: int) -> Optional['Node']:
        """Returns the child reached when the symptom takes ``value``, or ``None`` if no condition explains it."""
        for branch_value, node in self.branches:
            if branch_value == value:
                return node
        return None


Node = Union[DecisionNode, LeafNode]


def make_leaf(model: DiagnosisModel, block: Sequence[int], depth: int) -> LeafNode:
    """Creates a leaf for a block of conditions, computing its probability and posterior distribution."""
    members = tuple(sorted(block))
    probs = [float(model.probs[i]) for i in members]
    probability = math.fsum(probs)
    return LeafNode(
        block=members, probability=probability, posterior=tuple(p / probability for p in probs), depth=depth
    )


class DiagnosisTree:
    """A decision tree telling which symptom to observe next, given the values observed so far.

    Every root-to-leaf path uses each symptom at most once, and the leaves together partition the conditions.
    """

    def __init__(
        self,
        root: Node,
        condition_names: Sequence[str],
        symptom_names: Sequence[str],
        alphabet_size: int,
        criterion: Optional[Criterion] = None,
    ):
        """Creates a new DiagnosisTree.

        Parameters
        ----------
        root: Node
            The root node.
        condition_names: Sequence[str]
            Names of the conditions of the model the tree was built over.
        symptom_names: Sequence[str]
            Names of the symptoms of the model the tree was built over.
        alphabet_size: int
            The size λ of the symptom value alphabet.
        criterion: Criterion, default=None
            The criterion used to build the tree, if known.
        """
        self.root = root
        self.condition_names = tuple(condition_names)
        self.symptom_names = tuple(symptom_names)
        self.alphabet_size = alphabet_size
        self.criterion = criterion

    @classmethod
    def for_model(cls, root: Node, model: DiagnosisModel, criterion: Optional[Criterion] = None) -> 'DiagnosisTree':
        """Creates a tree over the conditions and symptoms of a model."""
        return cls(root, model.conditions.names, model.matrix.symptom_names, model.alphabet.size, criterion)

    def nodes(self) -> Iterator[Node]:
        """Iterates over all nodes in pre-order, children by ascending edge value."""
        stack: List[Node] = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, DecisionNode):
                stack.extend(child for _, child in reversed(node.branches))

    def decision_nodes(self) -> List[DecisionNode]:  # noqa: D102
        return [node for node in self.nodes() if isinstance(node, DecisionNode)]

    def leaves(self) -> List[LeafNode]:  # noqa: D102
        return [node for node in self.nodes() if isinstance(node, LeafNode)]

    def paths(self) -> List[Tuple[Tuple[int, ...], LeafNode]]:
        """Returns the symptom sequence leading to every leaf, in pre-order."""
        paths = []

        def _walk(node: Node, symptoms: Tuple[int, ...]):
            if isinstance(node, LeafNode):
                paths.append((symptoms, node))
                return
            for _, child in node.branches:
                _walk(child, symptoms + (node.symptom,))

        _walk(self.root, ())
        return paths

    @property
    def depth(self) -> int:
        """The largest number of tests performed on any path."""
        return max(leaf.depth for leaf in self.leaves())

    def symptoms_used(self) -> Set[int]:
        """Returns the distinct symptoms observed anywhere in the tree."""
        return {node.symptom for node in self.decision_nodes()}

    def leaf_blocks(self) -> List[Tuple[int, ...]]:  # noqa: D102
        return [leaf.block for leaf in self.leaves()]

    def __eq__(self, other):
        """Establishes structural equality."""
        return (
            isinstance(other, DiagnosisTree)
            and self.root == other.root
            and self.condition_names == other.condition_names
            and self.symptom_names == other.symptom_names
            and self.alphabet_size == other.alphabet_size
        )

    def __repr__(self):
        """Returns a short textual summary of the tree."""
        leaves = self.leaves()
        return (
            f'DiagnosisTree[tests={len(self.decision_nodes())}, leaves={len(leaves)}, '
            f'ambiguous_leaves={sum(leaf.status == LeafStatus.AMBIGUOUS for leaf in leaves)}, depth={self.depth}]'
        )


def diagnose_step(tree: DiagnosisTree, cursor: DecisionNode, observed: Union[int, np.integer]) -> Node:
    """Follows the edge of a decision node that matches an observed symptom value.

    Parameters
    ----------
    tree: DiagnosisTree
        The tree being executed.
    cursor: DecisionNode
        The node whose symptom was observed.
    observed: Union[int, np.integer]
        The observed symptom value, in ``{0, ..., λ-1}``.

    Returns
    -------
    node: Node
        The next decision node, or the leaf holding the remaining conditions.

    Raises
    ------
    ValueOutOfAlphabetException
        When ``observed`` is not a value of the alphabet.
    ContradictoryObservationException
        When no remaining condition produces ``observed`` for the symptom.
    """
    if not isinstance(cursor, DecisionNode):
        raise InvalidArgumentsException('the cursor must point to a decision node, not to a leaf.')
    is_integer = isinstance(observed, (int, np.integer)) and not isinstance(observed, bool)
    if not is_integer or not 0 <= observed < tree.alphabet_size:
        raise ValueOutOfAlphabetException(
            f'observed value {observed!r} is not in {{0, ..., {tree.alphabet_size - 1}}}.'
        )
    observed = int(observed)
    child = cursor.child(observed)
    if child is None:
        raise ContradictoryObservationException(
            f"value {observed} of symptom '{tree.symptom_names[cursor.symptom]}' is impossible for the remaining "
            f'conditions {[tree.condition_names[i] for i in cursor.block]}.'
        )
    return child
