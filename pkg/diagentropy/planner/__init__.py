#  License: Apache Software License 2.0

"""Greedy planning of a diagnosis: selection criteria, diagnosis trees and their reports."""

from .criterion import Criterion, CriterionKind  # isort: skip
from .tree import DecisionNode, DiagnosisTree, LeafNode, LeafStatus, Node, diagnose_step, make_leaf  # isort: skip
from .result import PlanReport, PlanStep, evaluate_tree, most_probable_leaf, path_ledger, validate_tree  # isort: skip
from .planner import (  # isort: skip
    POSITIVE_INFORMATION_THRESHOLD,
    TIE_TOLERANCE,
    build_tree,
    select_next,
    select_symptom_set,
)
from .comparison import CriteriaComparison, compare_criteria  # isort: skip
