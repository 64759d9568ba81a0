#  License: Apache Software License 2.0

"""Tests for the combinatorial-probabilistic entropy and information."""
import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagentropy.datasets import load_two_condition_model, load_worked_example_model
from diagentropy.entropy import (
    MeasureKind,
    MeasureValue,
    clamp_difference,
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
from diagentropy.exceptions import (
    EmptyInputException,
    InvalidArgumentsException,
    InvalidBlockException,
    NonpositiveWeightException,
    NotARefinementException,
)
from diagentropy.model import Partition, induce_partition, partition_for, singleton_partition, trivial_partition

weights = st.lists(st.floats(min_value=1e-6, max_value=10.0, allow_nan=False), min_size=1, max_size=30)


@pytest.fixture
def model():  # noqa: D103
    return load_worked_example_model()


@pytest.fixture
def two_block_partition(model):  # noqa: D103
    return Partition.from_blocks(model, [(0, 1), (2, 3, 4)])


def test_hb_of_two_equiprobable_conditions_is_one():  # noqa: D103
    assert float(hb_pairwise([0.5, 0.5])) == 1.0
    assert float(hb_closed([0.5, 0.5])) == 1.0


def test_hb_of_single_condition_is_zero():  # noqa: D103
    assert float(hb_pairwise([1.0])) == 0.0
    assert float(hb_closed([1.0])) == 0.0


def test_hb_of_worked_example_is_condition_count_minus_one(model):  # noqa: D103
    assert float(hb_pairwise(model.probs)) == pytest.approx(4.0, abs=1e-12)
    assert float(hb_partition(trivial_partition(model))) == pytest.approx(4.0, abs=1e-12)


def test_hb_returns_combinatorial_measure_values():  # noqa: D103
    value = hb_pairwise([0.25, 0.75])
    assert isinstance(value, MeasureValue)
    assert value.kind == MeasureKind.COMBINATORIAL


@pytest.mark.parametrize('function', [hb_pairwise, hb_closed])
def test_hb_rejects_empty_weights(function):  # noqa: D103
    with pytest.raises(EmptyInputException):
        function([])


@pytest.mark.parametrize('function', [hb_pairwise, hb_closed])
@pytest.mark.parametrize('values', [[0.5, 0.0, 0.5], [0.6, -0.1, 0.5]])
def test_hb_rejects_nonpositive_weights(function, values):  # noqa: D103
    with pytest.raises(NonpositiveWeightException, match='strictly positive'):
        function(values)


def test_hb_block():  # noqa: D103
    assert float(hb_block(0.9, 3)) == pytest.approx(1.8, abs=1e-12)
    assert float(hb_block(0.3, 1)) == 0.0


@pytest.mark.parametrize('probability,size', [(0.0, 2), (-0.1, 2), (0.5, 0)])
def test_hb_block_rejects_invalid_blocks(probability, size):  # noqa: D103
    with pytest.raises(InvalidBlockException):
        hb_block(probability, size)


def test_hb_partition_sums_block_contributions(two_block_partition):  # noqa: D103
    assert float(hb_partition(two_block_partition)) == pytest.approx(1.9, abs=1e-12)


def test_hb_of_singleton_partition_is_zero(model):  # noqa: D103
    assert float(hb_partition(singleton_partition(model))) == 0.0


@pytest.mark.parametrize('symptom,expected', [(0, 1.09), (1, 2.87), (2, 2.08)])
def test_jb_information_of_first_symptom(model, symptom, expected):  # noqa: D103
    information = jb_information(trivial_partition(model), induce_partition(model, symptom))
    assert float(information) == pytest.approx(expected, abs=1e-12)
    assert float(jb_pairwise_oracle(model, trivial_partition(model), induce_partition(model, symptom))) == (
        pytest.approx(expected, abs=1e-12)
    )


def test_jb_of_two_condition_model_is_one():  # noqa: D103
    model = load_two_condition_model()
    assert float(jb_information(trivial_partition(model), induce_partition(model, 0))) == pytest.approx(1.0)


def test_jb_dual_forms_agree(two_block_partition):  # noqa: D103
    first, second = jb_dual_forms(two_block_partition)
    assert first == pytest.approx(2.1, abs=1e-12)
    assert second == pytest.approx(2.1, abs=1e-12)
    assert float(jb_set_information(two_block_partition)) == pytest.approx(2.1, abs=1e-12)


def test_jb_conditional_information(model):  # noqa: D103
    before, after = induce_partition(model, 1), partition_for(model, [1, 2])
    assert float(jb_information(before, after)) == pytest.approx(1.05, abs=1e-12)
    assert float(jb_pairwise_oracle(model, before, after)) == pytest.approx(1.05, abs=1e-12)
    first, second = jb_conditional_forms(before, after)
    assert first == pytest.approx(1.05, abs=1e-12)
    assert second == pytest.approx(1.05, abs=1e-12)


def test_jb_set_information_adds_conditional_information(model):  # noqa: D103
    before, after = induce_partition(model, 1), partition_for(model, [1, 2])
    assert float(jb_set_information(after)) == pytest.approx(
        float(jb_set_information(before)) + float(jb_information(before, after)), abs=1e-12
    )


def test_jb_of_reapplied_partition_is_zero(model):  # noqa: D103
    partition = induce_partition(model, 1)
    assert float(jb_information(partition, partition)) == 0.0


@pytest.mark.parametrize('function', [jb_information, jb_conditional_forms])
def test_jb_rejects_partitions_that_do_not_refine(model, function):  # noqa: D103
    with pytest.raises(NotARefinementException):
        function(induce_partition(model, 1), induce_partition(model, 0))


def test_jb_pairwise_oracle_rejects_partitions_that_do_not_refine(model):  # noqa: D103
    with pytest.raises(NotARefinementException):
        jb_pairwise_oracle(model, induce_partition(model, 1), induce_partition(model, 0))


def test_clamp_difference():  # noqa: D103
    assert clamp_difference(0.25) == 0.25
    assert clamp_difference(-1e-13) == 0.0
    with pytest.raises(InvalidArgumentsException, match='negative beyond tolerance'):
        clamp_difference(-1e-6)


def test_measure_value_rejects_negative_values():  # noqa: D103
    with pytest.raises(InvalidArgumentsException, match='cannot be negative'):
        MeasureValue(-0.5, MeasureKind.COMBINATORIAL)


@settings(max_examples=200, deadline=None)
@given(weights)
def test_hb_pairwise_equals_closed_form(values):  # noqa: D103
    assert float(hb_pairwise(values)) == pytest.approx(float(hb_closed(values)), rel=1e-12, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(min_value=1e-3, max_value=1.0), min_size=1, max_size=50))
def test_hb_of_normalized_weights_is_size_minus_one(values):  # noqa: D103
    total = math.fsum(values)
    normalized = [value / total for value in values]
    assert float(hb_pairwise(normalized)) == pytest.approx(len(values) - 1, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(weights, st.sampled_from([0.25, 1.0, 3.5]))
def test_hb_pairwise_is_linear_in_the_weights(values, factor):  # noqa: D103
    scaled = [factor * value for value in values]
    assert float(hb_pairwise(scaled)) == pytest.approx(factor * float(hb_pairwise(values)), rel=1e-12, abs=1e-12)


def test_hb_pairwise_enumerates_all_pairs():  # noqa: D103
    values = [0.1, 0.2, 0.3, 0.4]
    expected = math.fsum(a + b for a, b in itertools.combinations(values, 2))
    assert float(hb_pairwise(values)) == pytest.approx(expected, abs=1e-15)
