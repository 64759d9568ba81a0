#  License: Apache Software License 2.0

"""Entropy and information measures for diagnosis models.

This package contains two families of measures:

- Shannon entropy and information, computed from conditional probabilities within partition blocks.
- The combinatorial-probabilistic entropy and information, computed from block probabilities and sizes only.
"""
from .base import (
    ACCUMULATED_TOLERANCE,
    IDENTITY_TOLERANCE,
    NEGATIVE_CLAMP_TOLERANCE,
    MeasureKind,
    MeasureValue,
    clamp_difference,
)
from .combinatorial import (
    hb_block,
    hb_closed,
    hb_pairwise,
    hb_partition,
    jb_conditional_forms,
    jb_dual_forms,
    jb_information,
    jb_pairwise_oracle,
    jb_set_information,
)
from .shannon import (
    shannon_block_entropy,
    shannon_entropy,
    shannon_information,
    shannon_partition_entropy,
    shannon_uniform_entropy,
)
