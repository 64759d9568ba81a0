#  License: Apache Software License 2.0

"""The package containing the diagnosis model and the partition algebra induced by its symptoms."""

from .base import (
    SUM_TOLERANCE,
    ConditionSet,
    DiagnosisModel,
    DiagnosticMatrix,
    ValueAlphabet,
    validate_model,
)
from .partition import (
    Block,
    Partition,
    conditional_probs,
    induce_partition,
    partition_for,
    refine_partition,
    singleton_partition,
    trivial_partition,
)
