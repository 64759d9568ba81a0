#  License: Apache Software License 2.0

"""Side-by-side comparison of the trees built under the combinatorial and the Shannon criterion."""
import logging
from typing import Any, Dict, Optional

import pandas as pd

from diagentropy.model import DiagnosisModel
from diagentropy.oracle.exhaustive import EXHAUSTIVE_LIMIT, exhaustive_optimal_tree
from diagentropy.planner.criterion import Criterion, CriterionKind
from diagentropy.planner.planner import build_tree
from diagentropy.planner.result import PlanReport
from diagentropy.planner.tree import DiagnosisTree

logger = logging.getLogger(__name__)


class CriteriaComparison:
    """Contains the trees and reports built under both criteria, and the exhaustive optimum when available."""

    def __init__(
        self,
        trees: Dict[CriterionKind, DiagnosisTree],
        reports: Dict[CriterionKind, PlanReport],
        optimal_expected_test_count: Optional[float] = None,
    ):
        """Creates a new CriteriaComparison.

        Parameters
        ----------
        trees: Dict[CriterionKind, DiagnosisTree]
            The tree built under each criterion.
        reports: Dict[CriterionKind, PlanReport]
            The report of each tree.
        optimal_expected_test_count: float, default=None
            The smallest expected test count of any tree, ``None`` when the model was too large to search.
        """
        self.trees = trees
        self.reports = reports
        self.optimal_expected_test_count = optimal_expected_test_count

    @property
    def data(self) -> pd.DataFrame:
        """One row per criterion, ordered combinatorial first."""
        rows = []
        for kind in (CriterionKind.COMBINATORIAL, CriterionKind.SHANNON):
            report = self.reports[kind]
            rows.append(
                {
                    'criterion': kind.value,
                    'expected_test_count': report.expected_test_count,
                    'worst_case_depth': report.worst_case_depth,
                    'residual_hb': report.residual_hb,
                    'residual_shannon': report.residual_shannon,
                    'ambiguous_leaves': report.ambiguous_leaves,
                    'optimal_expected_test_count': self.optimal_expected_test_count,
                    'optimality_gap': None
                    if self.optimal_expected_test_count is None
                    else report.expected_test_count - self.optimal_expected_test_count,
                }
            )
        return pd.DataFrame(rows)

    def same_tree(self) -> bool:
        """Returns whether both criteria built structurally identical trees."""
        return self.trees[CriterionKind.COMBINATORIAL] == self.trees[CriterionKind.SHANNON]

    def to_dict(self) -> Dict[str, Any]:
        """Returns the comparison as a dictionary of plain values."""
        return {
            'criteria': {kind.value: self.reports[kind].to_dict() for kind in self.reports},
            'optimal_expected_test_count': self.optimal_expected_test_count,
            'same_tree': self.same_tree(),
        }


def compare_criteria(model: DiagnosisModel, n_jobs: Optional[int] = None) -> CriteriaComparison:
    """Builds diagnosis trees under both criteria and compares their cost.

    The exhaustive optimum is included when the model has at most ``EXHAUSTIVE_LIMIT`` conditions and symptoms.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> comparison = compare_criteria(load_worked_example_model())
    >>> comparison.data[['criterion', 'expected_test_count']].round(12).values.tolist()
    [['combinatorial', 2.08], ['shannon', 2.08]]
    """
    trees, reports = {}, {}
    for kind in (CriterionKind.COMBINATORIAL, CriterionKind.SHANNON):
        trees[kind], reports[kind] = build_tree(model, Criterion(kind), n_jobs=n_jobs)

    optimum = None
    if model.condition_count <= EXHAUSTIVE_LIMIT and model.symptom_count <= EXHAUSTIVE_LIMIT:
        optimum = exhaustive_optimal_tree(model)
    else:
        logger.info(
            f'skipping the exhaustive optimum for a model with {model.condition_count} conditions and '
            f'{model.symptom_count} symptoms'
        )
    return CriteriaComparison(trees, reports, optimum)
