#  License: Apache Software License 2.0

"""Selection criteria used to rank symptoms while planning a diagnosis."""
import math
from enum import Enum
from typing import Iterable, Optional

from diagentropy.entropy import (
    MeasureKind,
    hb_block,
    hb_partition,
    jb_information,
    shannon_block_entropy,
    shannon_information,
    shannon_partition_entropy,
)
from diagentropy.exceptions import InvalidArgumentsException
from diagentropy.model import Block, DiagnosisModel, Partition


class CriterionKind(str, Enum):
    """A listing of the available symptom selection criteria.

    COMBINATORIAL: maximize the combinatorial-probabilistic information ``J_B``.
    SHANNON: maximize the Shannon information ``J``.
    """

    COMBINATORIAL = 'combinatorial'
    SHANNON = 'shannon'

    @staticmethod
    def parse(kind: str):
        """Returns a CriterionKind instance from a string representation."""
        if kind in ('cb', 'combinatorial'):
            return CriterionKind.COMBINATORIAL
        elif kind == 'shannon':
            return CriterionKind.SHANNON
        else:
            raise InvalidArgumentsException(
                f"unknown criterion '{kind}'. Please provide one of: ['cb', 'combinatorial', 'shannon']."
            )


class Criterion:
    """Measures the uncertainty left by a partition and the information of refining it.

    Examples
    --------
    >>> from diagentropy.planner import Criterion
    >>> criterion = Criterion.parse('shannon', shannon_base=2)
    >>> criterion.measure_kind
    <MeasureKind.SHANNON: 'shannon'>
    """

    def __init__(self, kind: CriterionKind = CriterionKind.COMBINATORIAL, shannon_base: Optional[int] = None):
        """Creates a new Criterion.

        Parameters
        ----------
        kind: CriterionKind, default=CriterionKind.COMBINATORIAL
            The measure to maximize.
        shannon_base: int, default=None
            The logarithm base for the Shannon criterion. Defaults to the alphabet size of the model.
            Ignored by the combinatorial criterion.
        """
        if not isinstance(kind, CriterionKind):
            kind = CriterionKind.parse(kind)
        self.kind = kind
        self.shannon_base = shannon_base

    @classmethod
    def parse(cls, kind: str, shannon_base: Optional[int] = None) -> 'Criterion':
        """Creates a Criterion from a textual kind such as ``'cb'`` or ``'shannon'``."""
        return cls(CriterionKind.parse(kind), shannon_base)

    @property
    def measure_kind(self) -> MeasureKind:  # noqa: D102
        return MeasureKind.SHANNON if self.kind == CriterionKind.SHANNON else MeasureKind.COMBINATORIAL

    def entropy(self, partition: Partition, model: DiagnosisModel) -> float:
        """Returns the uncertainty remaining for a partition."""
        if self.kind == CriterionKind.SHANNON:
            return float(shannon_partition_entropy(partition, model, self.shannon_base))
        return float(hb_partition(partition))

    def block_entropy(self, block: Block, model: DiagnosisModel) -> float:
        """Returns the contribution of a single block to the uncertainty of a partition."""
        if self.kind == CriterionKind.SHANNON:
            return shannon_block_entropy(block, model, self.shannon_base)
        return float(hb_block(block.probability, block.size))

    def blocks_entropy(self, blocks: Iterable[Block], model: DiagnosisModel) -> float:
        """Returns the summed contribution of a collection of blocks."""
        return math.fsum(self.block_entropy(block, model) for block in blocks)

    def information(self, before: Partition, after: Partition, model: DiagnosisModel) -> float:
        """Returns the information delivered by refining ``before`` into ``after``."""
        if self.kind == CriterionKind.SHANNON:
            return float(shannon_information(before, after, model, self.shannon_base))
        return float(jb_information(before, after))

    def __eq__(self, other):
        """Establishes equality by comparing kind and base."""
        return isinstance(other, Criterion) and self.kind == other.kind and self.shannon_base == other.shannon_base

    def __repr__(self):
        """String representation of a Criterion."""
        if self.kind == CriterionKind.SHANNON:
            return f'Criterion(kind={self.kind.value}, shannon_base={self.shannon_base})'
        return f'Criterion(kind={self.kind.value})'
