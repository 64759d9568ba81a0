#  License: Apache Software License 2.0

"""Partitions of the condition set induced by the symptoms selected so far.

Selecting a symptom groups the conditions by the value the symptom takes for them. Every further symptom splits
each of those groups again. The resulting families of disjoint blocks are represented by :class:`Partition`.
"""
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from diagentropy.exceptions import (
    IndexOutOfRangeException,
    InvalidArgumentsException,
    SymptomAlreadyAppliedException,
)
from diagentropy.model.base import SUM_TOLERANCE, DiagnosisModel


@dataclass(frozen=True)
class Block:
    """A set of conditions that remain indistinguishable given the inducing symptoms.

    Attributes
    ----------
    members: Tuple[int, ...]
        The sorted condition indices belonging to the block.
    probability: float
        The block probability ``p_j``, i.e. the sum of the prior probabilities of its members.
    signature: Tuple[int, ...]
        The values the inducing symptoms take for every member of the block, in selection order.
    """

    members: Tuple[int, ...]
    probability: float
    signature: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        """The number of conditions ``n_j`` in the block."""
        return len(self.members)


def _block(model: DiagnosisModel, members: Iterable[int], signature: Tuple[int, ...]) -> Block:
    members = tuple(sorted(members))
    return Block(members=members, probability=math.fsum(model.probs[list(members)]), signature=signature)


@dataclass(frozen=True)
class Partition:
    """An ordered family of disjoint, non-empty condition blocks.

    A partition produced from :func:`trivial_partition` by :func:`induce_partition` and :func:`refine_partition`
    covers all conditions of the model. A partition obtained through :meth:`Partition.restrict` covers only the
    conditions of a single block; its block probabilities stay the prior (absolute) probabilities.

    Attributes
    ----------
    blocks: Tuple[Block, ...]
        The blocks, ordered by their parent block first and by ascending symptom value second.
    inducing_symptoms: Tuple[int, ...]
        The symptom indices that were applied to obtain this partition, in selection order.
    """

    blocks: Tuple[Block, ...]
    inducing_symptoms: Tuple[int, ...] = ()

    def __len__(self):
        """Returns the number of blocks ``m``."""
        return len(self.blocks)

    @property
    def universe(self) -> Tuple[int, ...]:
        """The sorted condition indices covered by the partition."""
        return tuple(sorted(i for block in self.blocks for i in block.members))

    @property
    def condition_count(self) -> int:  # noqa: D102
        return sum(block.size for block in self.blocks)

    @property
    def probability(self) -> float:
        """The total probability of the covered conditions, one for a complete partition."""
        return math.fsum(block.probability for block in self.blocks)

    @property
    def block_probabilities(self) -> np.ndarray:  # noqa: D102
        return np.asarray([block.probability for block in self.blocks], dtype=float)

    @property
    def block_sizes(self) -> np.ndarray:  # noqa: D102
        return np.asarray([block.size for block in self.blocks], dtype=int)

    def block_of(self, condition: int) -> int:
        """Returns the index of the block holding the given condition."""
        for j, block in enumerate(self.blocks):
            if condition in block.members:
                return j
        raise IndexOutOfRangeException(f'condition {condition} is not covered by this partition.')

    def membership(self) -> Dict[int, int]:
        """Maps every covered condition to the index of its block."""
        return {i: j for j, block in enumerate(self.blocks) for i in block.members}

    def is_singleton(self) -> bool:
        """Returns whether every block holds exactly one condition."""
        return all(block.size == 1 for block in self.blocks)

    def as_set_family(self) -> FrozenSet[FrozenSet[int]]:
        """Returns the blocks as an unordered family of condition sets."""
        return frozenset(frozenset(block.members) for block in self.blocks)

    def is_refinement_of(self, other: 'Partition') -> bool:
        """Returns whether every block of this partition lies within a single block of ``other``."""
        if self.universe != other.universe:
            return False
        parent = other.membership()
        return all(len({parent[i] for i in block.members}) == 1 for block in self.blocks)

    def restrict(self, block: int) -> 'Partition':
        """Returns the partition consisting of a single block of this partition.

        The inducing symptoms are kept, so refining the restricted partition never re-applies them.
        """
        if not 0 <= block < len(self.blocks):
            raise IndexOutOfRangeException(f'block index {block} is out of range [0, {len(self.blocks)}).')
        return Partition(blocks=(self.blocks[block],), inducing_symptoms=self.inducing_symptoms)

    def validate(self, model: DiagnosisModel, tolerance: float = SUM_TOLERANCE) -> bool:
        """Checks the partition invariants against a model.

        Blocks must be non-empty and pairwise disjoint, cached block probabilities must match the priors, and a
        partition covering all conditions must have probabilities summing to one.
        """
        seen: set = set()
        for block in self.blocks:
            if block.size == 0 or seen.intersection(block.members):
                return False
            seen.update(block.members)
            if abs(block.probability - math.fsum(model.probs[list(block.members)])) > tolerance:
                return False
        if not seen.issubset(range(model.condition_count)):
            return False
        if len(seen) == model.condition_count and abs(self.probability - 1) > tolerance:
            return False
        return True

    @classmethod
    def from_blocks(cls, model: DiagnosisModel, blocks: Sequence[Sequence[int]]) -> 'Partition':
        """Creates a partition from explicit blocks of condition indices, e.g. the leaves of a diagnosis tree.

        Blocks are kept in the given order. No inducing symptoms are recorded.
        """
        seen: set = set()
        created = []
        for members in blocks:
            if len(members) == 0:
                raise InvalidArgumentsException('partition blocks cannot be empty.')
            for i in members:
                if not 0 <= i < model.condition_count:
                    raise IndexOutOfRangeException(
                        f'condition index {i} is out of range [0, {model.condition_count}).'
                    )
                if i in seen:
                    raise InvalidArgumentsException(f'condition {i} occurs in more than one block.')
                seen.add(i)
            created.append(_block(model, members, ()))
        return cls(blocks=tuple(created))


def trivial_partition(model: DiagnosisModel) -> Partition:
    """Returns the partition before any symptom is selected: a single block holding every condition."""
    return Partition(blocks=(_block(model, range(model.condition_count), ()),))


def singleton_partition(model: DiagnosisModel) -> Partition:
    """Returns the partition in which every condition forms a block of its own."""
    return Partition(blocks=tuple(_block(model, (i,), ()) for i in range(model.condition_count)))


def _split(model: DiagnosisModel, block: Block, symptom: int) -> List[Block]:
    column = model.matrix.column(symptom)
    groups: Dict[int, List[int]] = {}
    for i in block.members:
        groups.setdefault(int(column[i]), []).append(i)
    return [_block(model, groups[value], block.signature + (value,)) for value in sorted(groups)]


def refine_partition(partition: Partition, model: DiagnosisModel, symptom: int) -> Partition:
    """Splits every block of a partition by the values of one more symptom.

    Sub-blocks are ordered by their parent block first and by ascending symptom value second.
    Empty value classes are dropped.

    Parameters
    ----------
    partition: Partition
        The partition to refine.
    model: DiagnosisModel
        The model the partition was built over.
    symptom: int
        Index of the symptom to apply. It may not have induced the partition already.

    Returns
    -------
    refined: Partition
        The refined partition, with ``symptom`` appended to the inducing symptoms.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> model = load_worked_example_model()
    >>> partition = refine_partition(trivial_partition(model), model, symptom=1)
    >>> [block.members for block in partition.blocks]
    [(0, 1, 4), (2, 3)]
    """
    if not 0 <= symptom < model.symptom_count:
        raise IndexOutOfRangeException(f'symptom index {symptom} is out of range [0, {model.symptom_count}).')
    if symptom in partition.inducing_symptoms:
        raise SymptomAlreadyAppliedException(
            f"symptom '{model.matrix.symptom_names[symptom]}' was already applied to this partition."
        )

    blocks = [sub_block for block in partition.blocks for sub_block in _split(model, block, symptom)]
    return Partition(blocks=tuple(blocks), inducing_symptoms=partition.inducing_symptoms + (symptom,))


def induce_partition(model: DiagnosisModel, symptom: int) -> Partition:
    """Returns the partition induced by a single symptom, blocks ordered by ascending symptom value."""
    return refine_partition(trivial_partition(model), model, symptom)


def partition_for(model: DiagnosisModel, symptoms: Sequence[int]) -> Partition:
    """Returns the partition induced by applying a sequence of symptoms to the trivial partition."""
    partition = trivial_partition(model)
    for symptom in symptoms:
        partition = refine_partition(partition, model, symptom)
    return partition


def conditional_probs(partition: Partition, block: int, model: DiagnosisModel) -> np.ndarray:
    """Returns the probabilities ``P(e) / p_j`` of the members of a block, given the block contains the condition.

    Parameters
    ----------
    partition: Partition
        The partition holding the block.
    block: int
        Index of the block within the partition.
    model: DiagnosisModel
        The model providing the prior probabilities.

    Returns
    -------
    probs: numpy.ndarray
        The conditional probabilities of the block members, in member order.
    """
    if not 0 <= block < len(partition.blocks):
        raise IndexOutOfRangeException(f'block index {block} is out of range [0, {len(partition.blocks)}).')
    selected = partition.blocks[block]
    return model.probs[list(selected.members)] / selected.probability
