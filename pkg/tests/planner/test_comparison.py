#  License: Apache Software License 2.0

"""Tests for the comparison of the combinatorial and the Shannon criterion."""
import pytest

from diagentropy.datasets import load_worked_example_model
from diagentropy.oracle import InstanceSpec, generate_instance
from diagentropy.planner import CriterionKind, compare_criteria


def test_compare_criteria_on_worked_example():  # noqa: D103
    comparison = compare_criteria(load_worked_example_model())
    data = comparison.data
    assert data['criterion'].tolist() == ['combinatorial', 'shannon']
    assert data['expected_test_count'].tolist() == pytest.approx([2.08, 2.08], abs=1e-12)
    assert data['worst_case_depth'].tolist() == [3, 3]
    assert data['ambiguous_leaves'].tolist() == [0, 0]
    assert comparison.optimal_expected_test_count == pytest.approx(2.08, abs=1e-12)
    assert data['optimality_gap'].tolist() == pytest.approx([0.0, 0.0], abs=1e-12)
    assert comparison.same_tree()


def test_compare_criteria_skips_optimum_for_large_models():  # noqa: D103
    comparison = compare_criteria(generate_instance(InstanceSpec(n=12, t=4, seed=3)))
    assert comparison.optimal_expected_test_count is None
    assert comparison.data['optimality_gap'].isna().all()


def test_compare_criteria_to_dict():  # noqa: D103
    document = compare_criteria(load_worked_example_model()).to_dict()
    assert set(document['criteria']) == {'combinatorial', 'shannon'}
    assert document['same_tree'] is True
    assert document['criteria']['shannon']['criterion'] == CriterionKind.SHANNON.value
