#  License: Apache Software License 2.0

"""The diagentropy library, planning diagnoses by the information their symptoms deliver.

Use the library to:
- Measure the uncertainty of a diagnosis model with the combinatorial-probabilistic and the Shannon entropy
- Build greedy diagnosis trees under either criterion and report their additivity ledgers
- Verify the identities between the measures against brute-force reference implementations
"""

# PEP0440 compatible formatted version, see:
# https://www.python.org/dev/peps/pep-0440/
__version__ = '0.1.0'

import logging

from .datasets import load_two_condition_model, load_worked_example_model
from .documents import export_dot, parse_model, parse_tree, read_model, read_tree, serialize_model, serialize_tree
from .entropy import (
    MeasureKind,
    MeasureValue,
    hb_closed,
    hb_pairwise,
    hb_partition,
    jb_information,
    jb_pairwise_oracle,
    shannon_entropy,
    shannon_information,
    shannon_partition_entropy,
)
from .exceptions import (
    ContradictoryObservationException,
    InvalidArgumentsException,
    InvalidModelException,
    ParseException,
)
from .model import (
    DiagnosisModel,
    Partition,
    induce_partition,
    partition_for,
    refine_partition,
    trivial_partition,
    validate_model,
)
from .oracle import InstanceSpec, check_identities, exhaustive_optimal_tree, generate_instance
from .planner import (
    Criterion,
    CriterionKind,
    DiagnosisTree,
    PlanReport,
    build_tree,
    compare_criteria,
    diagnose_step,
    select_next,
    select_symptom_set,
)

logger = logging.getLogger(__name__)
