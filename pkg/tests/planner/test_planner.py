#  License: Apache Software License 2.0

"""Tests for greedy symptom selection and diagnosis tree construction."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import diagentropy.planner.planner as planner_module
from diagentropy.datasets import load_two_condition_model, load_worked_example_model
from diagentropy.model import induce_partition, trivial_partition, validate_model
from diagentropy.oracle import InstanceSpec, exhaustive_optimal_tree, generate_instance
from diagentropy.planner import (
    Criterion,
    CriterionKind,
    DecisionNode,
    LeafNode,
    LeafStatus,
    build_tree,
    select_next,
    select_symptom_set,
)


@pytest.fixture
def model():  # noqa: D103
    return load_worked_example_model()


@pytest.fixture
def ambiguous_model():  # noqa: D103
    return validate_model(
        {
            'lambda': 2,
            'conditions': [{'name': 'e1', 'p': 0.2}, {'name': 'e2', 'p': 0.3}, {'name': 'e3', 'p': 0.5}],
            'symptoms': ['d1', 'd2'],
            'matrix': [[0, 1], [0, 1], [1, 1]],
        }
    )


def test_select_next_picks_most_informative_symptom(model):  # noqa: D103
    symptom, information = select_next(trivial_partition(model), model, Criterion())
    assert symptom == 1
    assert information == pytest.approx(2.87, abs=1e-12)


def test_select_next_under_shannon_criterion(model):  # noqa: D103
    symptom, _ = select_next(trivial_partition(model), model, Criterion(CriterionKind.SHANNON))
    assert symptom == 1


def test_select_next_honours_exclusions(model):  # noqa: D103
    symptom, information = select_next(trivial_partition(model), model, Criterion(), excluded={1})
    assert symptom == 2
    assert information == pytest.approx(2.08, abs=1e-12)


def test_select_next_skips_inducing_symptoms(model):  # noqa: D103
    symptom, information = select_next(induce_partition(model, 1), model, Criterion())
    assert symptom == 2
    assert information == pytest.approx(1.05, abs=1e-12)


def test_select_next_breaks_ties_by_smallest_index():  # noqa: D103
    model = validate_model(
        {
            'lambda': 2,
            'conditions': [{'name': 'e1', 'p': 0.5}, {'name': 'e2', 'p': 0.5}],
            'symptoms': ['d1', 'd2', 'd3'],
            'matrix': [[0, 1, 1], [0, 0, 0]],
        }
    )
    symptom, _ = select_next(trivial_partition(model), model, Criterion())
    assert symptom == 1


def test_select_next_returns_none_without_informative_symptom(ambiguous_model):  # noqa: D103
    partition = induce_partition(ambiguous_model, 0).restrict(0)
    assert select_next(partition, ambiguous_model, Criterion()) is None


def test_select_next_never_picks_constant_symptom(ambiguous_model):  # noqa: D103
    for kind in CriterionKind:
        symptom, _ = select_next(trivial_partition(ambiguous_model), ambiguous_model, Criterion(kind))
        assert symptom == 0


def test_select_next_result_does_not_depend_on_jobs(model):  # noqa: D103
    sequential = select_next(trivial_partition(model), model, Criterion(), n_jobs=1)
    concurrent = select_next(trivial_partition(model), model, Criterion(), n_jobs=2)
    assert sequential == concurrent


@pytest.mark.parametrize('kind', list(CriterionKind))
def test_build_tree_on_worked_example(model, kind):  # noqa: D103
    tree, report = build_tree(model, Criterion(kind))

    root = tree.root
    assert isinstance(root, DecisionNode)
    assert root.symptom == 1
    assert root.values == (0, 1)
    left, right = root.child(0), root.child(1)
    assert (left.symptom, left.block) == (2, (0, 1, 4))
    assert (right.symptom, right.block) == (2, (2, 3))
    assert left.child(0).symptom == 0
    assert left.child(0).block == (0, 4)
    assert left.child(1).block == (1,)
    assert [leaf.block for leaf in tree.leaves()] == [(0,), (4,), (1,), (2,), (3,)]

    assert report.expected_test_count == pytest.approx(2.08, abs=1e-12)
    assert report.worst_case_depth == 3
    assert report.residual_hb == pytest.approx(0.0, abs=1e-12)
    assert report.resolved_leaves == 5
    assert report.ambiguous_leaves == 0


def test_build_tree_defaults_to_combinatorial_criterion(model):  # noqa: D103
    tree, report = build_tree(model)
    assert tree.criterion == Criterion()
    assert report.criterion.kind == CriterionKind.COMBINATORIAL


def test_build_tree_global_ledger(model):  # noqa: D103
    _, report = build_tree(model)
    assert [step.symptom_name for step in report.steps] == ['d2', 'd3', 'd1', 'd3']
    assert [step.information for step in report.steps] == pytest.approx([2.87, 0.18, 0.08, 0.87], abs=1e-12)
    assert [step.residual_entropy for step in report.steps] == pytest.approx([1.13, 0.95, 0.87, 0.0], abs=1e-12)
    assert report.initial_entropy == pytest.approx(4.0, abs=1e-12)
    assert report.total_information == pytest.approx(4.0, abs=1e-12)


def test_build_tree_path_ledger_follows_most_probable_leaf(model):  # noqa: D103
    _, report = build_tree(model)
    assert [step.symptom_name for step in report.path_steps] == ['d2', 'd3']
    assert [step.information for step in report.path_steps] == pytest.approx([2.87, 1.05], abs=1e-12)
    assert report.path_steps[-1].residual_entropy == pytest.approx(0.08, abs=1e-12)


def test_build_tree_on_single_symptom_model():  # noqa: D103
    tree, report = build_tree(load_two_condition_model())
    assert tree.root.symptom == 0
    assert [leaf.block for leaf in tree.leaves()] == [(0,), (1,)]
    assert report.expected_test_count == 1.0
    assert [step.information for step in report.steps] == pytest.approx([1.0])


def test_build_tree_creates_ambiguous_leaf(ambiguous_model):  # noqa: D103
    tree, report = build_tree(ambiguous_model)
    leaves = tree.leaves()
    assert [leaf.block for leaf in leaves] == [(0, 1), (2,)]
    assert leaves[0].status == LeafStatus.AMBIGUOUS
    assert leaves[0].posterior == pytest.approx((0.4, 0.6))
    assert report.ambiguous_leaves == 1
    assert report.residual_hb == pytest.approx(0.5, abs=1e-12)
    assert report.residual_entropy == report.residual_hb


@pytest.fixture
def tiny_prior_model():  # noqa: D103
    return validate_model(
        {
            'lambda': 2,
            'conditions': [{'name': 'e1', 'p': 1 - 2e-13}, {'name': 'e2', 'p': 1e-13}, {'name': 'e3', 'p': 1e-13}],
            'symptoms': ['d1', 'd2'],
            'matrix': [[0, 0], [1, 0], [1, 1]],
        }
    )


@pytest.mark.parametrize('criterion', [Criterion(), Criterion(CriterionKind.SHANNON)])
def test_build_tree_separates_conditions_with_tiny_priors(tiny_prior_model, criterion):  # noqa: D103
    tree, report = build_tree(tiny_prior_model, criterion)
    assert report.ambiguous_leaves == 0
    assert report.residual_hb == 0
    assert report.worst_case_depth == 2
    assert sorted(leaf.block for leaf in tree.leaves()) == [(0,), (1,), (2,)]
    assert report.steps[-1].information == pytest.approx(2e-13, rel=1e-6)


def test_select_next_threshold_is_relative_to_block_mass(tiny_prior_model):  # noqa: D103
    tail = induce_partition(tiny_prior_model, 0).restrict(1)
    assert tail.universe == (1, 2)
    symptom, information = select_next(tail, tiny_prior_model, Criterion())
    assert symptom == 1
    assert information == pytest.approx(2e-13, rel=1e-6)


def test_build_tree_on_single_condition():  # noqa: D103
    model = validate_model({'lambda': 2, 'conditions': [{'name': 'e1', 'p': 1.0}], 'symptoms': ['d1'], 'matrix': [[0]]})
    tree, report = build_tree(model)
    assert isinstance(tree.root, LeafNode)
    assert report.steps == []
    assert report.expected_test_count == 0.0


def test_build_tree_delegates_report_to_evaluate_tree(model, mocker):  # noqa: D103
    spy = mocker.spy(planner_module, 'evaluate_tree')
    _, report = build_tree(model)
    spy.assert_called_once()
    assert spy.spy_return is report


def test_select_symptom_set_on_worked_example(model):  # noqa: D103
    steps = select_symptom_set(model)
    assert [step.symptom_name for step in steps] == ['d2', 'd3', 'd1']
    assert [step.information for step in steps] == pytest.approx([2.87, 1.05, 0.08], abs=1e-12)
    assert steps[-1].residual_entropy == pytest.approx(0.0, abs=1e-12)
    assert sum(step.information for step in steps) == pytest.approx(4.0, abs=1e-12)


def test_select_symptom_set_stops_when_nothing_separates(ambiguous_model):  # noqa: D103
    steps = select_symptom_set(ambiguous_model)
    assert [step.symptom for step in steps] == [0]
    assert steps[0].residual_entropy == pytest.approx(0.5, abs=1e-12)


def test_fully_resolving_tree_needs_three_symptoms(model):  # noqa: D103
    for kind in CriterionKind:
        tree, _ = build_tree(model, Criterion(kind))
        assert len(tree.symptoms_used()) >= 3


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=8),
    t=st.integers(min_value=1, max_value=5),
    lambda_=st.integers(min_value=2, max_value=3),
    seed=st.integers(min_value=0, max_value=2**32),
    kind=st.sampled_from(list(CriterionKind)),
)
def test_greedy_tree_is_never_better_than_optimum(n, t, lambda_, seed, kind):  # noqa: D103
    model = generate_instance(InstanceSpec(n=n, t=t, lambda_=lambda_, seed=seed))
    _, report = build_tree(model, Criterion(kind))
    optimum = exhaustive_optimal_tree(model)
    assert report.expected_test_count >= optimum - 1e-9
    assert report.total_information == pytest.approx(report.entropy_reduction, abs=1e-9)
