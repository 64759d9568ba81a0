#  License: Apache Software License 2.0

"""Verification of the identities relating the entropy measures, the partitions and the planner.

Every identity is evaluated on two independent code paths. The library side is computed with the closed forms of
:mod:`diagentropy.entropy`, the reference side by direct enumeration of condition pairs, value signatures or
telescoping sums. Identities are checked on fixed cases (every symptom, every tree node, every tree path) and on
random symptom orders drawn per trial. Each trial uses its own generator seeded with ``(seed, trial)``, so trials
can run in any order and in parallel without changing the report.
"""
import itertools
import logging
import math
from collections import defaultdict
from dataclasses import asdict, dataclass
from typing import Any, DefaultDict, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from diagentropy.entropy import (
    ACCUMULATED_TOLERANCE,
    IDENTITY_TOLERANCE,
    NEGATIVE_CLAMP_TOLERANCE,
    hb_block,
    hb_closed,
    hb_pairwise,
    hb_partition,
    jb_conditional_forms,
    jb_dual_forms,
    jb_information,
    jb_pairwise_oracle,
    jb_set_information,
    shannon_information,
    shannon_partition_entropy,
)
from diagentropy.exceptions import InvalidArgumentsException
from diagentropy.model import (
    ConditionSet,
    DiagnosisModel,
    DiagnosticMatrix,
    Partition,
    conditional_probs,
    induce_partition,
    partition_for,
    refine_partition,
    singleton_partition,
    trivial_partition,
)
from diagentropy.oracle.generation import InstanceSpec, generate_instance
from diagentropy.planner.criterion import Criterion, CriterionKind
from diagentropy.planner.planner import build_tree, select_next
from diagentropy.planner.result import path_ledger

LINEARITY_FACTORS = (0.25, 1.0, 3.5)

IDENTITIES: Dict[str, Tuple[str, float]] = {
    'pairwise_closed_form': ('pairwise and closed forms of the condition set entropy agree', IDENTITY_TOLERANCE),
    'condition_count_difference': (
        'entropy difference of two normalized condition sets equals their size difference',
        IDENTITY_TOLERANCE,
    ),
    'single_condition': ('a single condition has zero entropy', IDENTITY_TOLERANCE),
    'block_entropy': ('block entropy equals the summed probability of its condition pairs', IDENTITY_TOLERANCE),
    'partition_entropy': (
        'partition entropy equals the summed probability of condition pairs sharing a block',
        IDENTITY_TOLERANCE,
    ),
    'singleton_partition': ('a partition of singletons has zero entropy', IDENTITY_TOLERANCE),
    'dual_forms': ('both closed forms of the information of a single symptom agree', IDENTITY_TOLERANCE),
    'pairwise_information': (
        'information equals the summed probability of the condition pairs it separates',
        IDENTITY_TOLERANCE,
    ),
    'conditional_forms': ('both closed forms of conditional information agree', IDENTITY_TOLERANCE),
    'set_information_additivity': (
        'information of an extended symptom set adds the conditional information of the new symptom',
        ACCUMULATED_TOLERANCE,
    ),
    'ledger_additivity': (
        'conditional informations along a symptom sequence sum to the information of the set',
        ACCUMULATED_TOLERANCE,
    ),
    'shannon_additivity': (
        'conditional Shannon informations along a symptom sequence sum to the entropy drop',
        ACCUMULATED_TOLERANCE,
    ),
    'block_count_bound': ('k symptoms induce at most min(n, lambda^k) blocks', 0.0),
    'monotonicity': ('refining a partition never increases its entropy', NEGATIVE_CLAMP_TOLERANCE),
    'non_negativity': ('the information of every symptom is non-negative', NEGATIVE_CLAMP_TOLERANCE),
    'useless_symptom': ('a constant symptom delivers no information and is never selected', IDENTITY_TOLERANCE),
    'linearity': ('scaling the weights scales the pairwise entropy', IDENTITY_TOLERANCE),
    'refinement_order': ('the partition of a symptom set does not depend on the application order', 0.0),
    'probability_conservation': ('sub-block probabilities sum to the parent block probability', IDENTITY_TOLERANCE),
    'conditional_probabilities': ('conditional probabilities within a block sum to one', IDENTITY_TOLERANCE),
    'tree_structure': (
        'built trees never repeat a symptom on a path, keep leaf rows consistent and resolve distinct rows',
        0.0,
    ),
}

_Deviations = DefaultDict[str, List[float]]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    """The outcome of checking a single identity.

    Attributes
    ----------
    identity: str
        The name of the identity.
    description: str
        What the identity states.
    checks: int
        The number of evaluated cases.
    max_deviation: float
        The largest absolute deviation between the two sides over all cases.
    tolerance: float
        The largest deviation that is accepted.
    violations: int
        The number of cases deviating by more than the tolerance.
    """

    identity: str
    description: str
    checks: int
    max_deviation: float
    tolerance: float
    violations: int

    @property
    def passed(self) -> bool:  # noqa: D102
        return self.violations == 0


class VerificationReport:
    """Contains the outcome of an identity verification run."""

    def __init__(self, checks: List[IdentityCheck], seeds: Sequence[int], trials: int, instances: int = 1):
        """Creates a new VerificationReport.

        Parameters
        ----------
        checks: List[IdentityCheck]
            One entry per identity, in a fixed order.
        seeds: Sequence[int]
            The seeds the random cases were drawn with.
        trials: int
            The number of random trials per instance.
        instances: int, default=1
            The number of verified models.
        """
        self.checks = checks
        self.seeds = tuple(seeds)
        self.trials = trials
        self.instances = instances

    @property
    def passed(self) -> bool:
        """Whether every identity held in every case."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:  # noqa: D102
        return [check for check in self.checks if not check.passed]

    @property
    def data(self) -> pd.DataFrame:  # noqa: D102
        return pd.DataFrame(
            [{**asdict(check), 'passed': check.passed} for check in self.checks],
            columns=['identity', 'description', 'checks', 'max_deviation', 'tolerance', 'violations', 'passed'],
        )

    def to_dict(self) -> Dict[str, Any]:
        """Returns the report as a dictionary of plain values."""
        return {
            'passed': self.passed,
            'seeds': list(self.seeds),
            'trials': self.trials,
            'instances': self.instances,
            'checks': [{**asdict(check), 'passed': check.passed} for check in self.checks],
        }

    def __repr__(self):
        """Returns a short textual summary of the report."""
        return (
            f'VerificationReport[passed={self.passed}, identities={len(self.checks)}, '
            f'failures={len(self.failures)}, seeds={list(self.seeds)}]'
        )


def _normalized(model: DiagnosisModel) -> DiagnosisModel:
    total = math.fsum(model.probs.tolist())
    conditions = ConditionSet(model.conditions.names, [p / total for p in model.probs.tolist()])
    return DiagnosisModel(conditions, model.matrix)


def _with_constant_symptom(model: DiagnosisModel) -> DiagnosisModel:
    name = 'constant'
    while name in model.matrix.symptom_names:
        name += '_'
    values = np.hstack([model.matrix.values, np.zeros((model.condition_count, 1), dtype=int)])
    matrix = DiagnosticMatrix(values.tolist(), model.matrix.symptom_names + (name,), model.alphabet)
    return DiagnosisModel(model.conditions, matrix)


def _pairs_within(probs: Sequence[float], blocks: Iterable[Sequence[int]]) -> float:
    return math.fsum(probs[a] + probs[b] for block in blocks for a, b in itertools.combinations(block, 2))


def _signature_family(model: DiagnosisModel, symptoms: Sequence[int]) -> FrozenSet[FrozenSet[int]]:
    groups: Dict[Tuple[int, ...], set] = {}
    for i in range(model.condition_count):
        signature = tuple(int(model.relation(r, i)) for r in symptoms)
        groups.setdefault(signature, set()).add(i)
    return frozenset(frozenset(group) for group in groups.values())


def _check_chain(model: DiagnosisModel, order: Sequence[int], base: int, deviations: _Deviations):
    probs = model.probs.tolist()
    n = model.condition_count
    partitions = [trivial_partition(model)]
    for symptom in order:
        partitions.append(refine_partition(partitions[-1], model, symptom))

    for k in range(1, len(partitions)):
        before, after = partitions[k - 1], partitions[k]
        hb_before, hb_after = float(hb_partition(before)), float(hb_partition(after))
        h_before = float(shannon_partition_entropy(before, model, base))
        h_after = float(shannon_partition_entropy(after, model, base))

        deviations['block_count_bound'].append(max(0, len(after) - min(n, model.alphabet.size**k)))
        deviations['monotonicity'].append(max(0.0, hb_after - hb_before, h_after - h_before))

        information = float(jb_information(before, after))
        deviations['pairwise_information'].append(
            abs(information - float(jb_pairwise_oracle(model, before, after)))
        )
        first, second = jb_conditional_forms(before, after)
        deviations['conditional_forms'].append(max(abs(first - information), abs(second - information)))

        parent = before.membership()
        for j, block in enumerate(before.blocks):
            sub_total = math.fsum(sub.probability for sub in after.blocks if parent[sub.members[0]] == j)
            deviations['probability_conservation'].append(abs(sub_total - block.probability))
        for j in range(len(after)):
            deviations['conditional_probabilities'].append(abs(math.fsum(conditional_probs(after, j, model)) - 1))

        for symptom in range(model.symptom_count):
            if symptom in before.inducing_symptoms:
                continue
            candidate = refine_partition(before, model, symptom)
            deviations['non_negativity'].append(
                max(
                    0.0,
                    float(hb_partition(candidate)) - hb_before,
                    float(shannon_partition_entropy(candidate, model, base)) - h_before,
                )
            )

    final = partitions[-1]
    for block in final.blocks:
        deviations['block_entropy'].append(
            abs(float(hb_block(block.probability, block.size)) - _pairs_within(probs, [block.members]))
        )
    deviations['partition_entropy'].append(
        abs(float(hb_partition(final)) - _pairs_within(probs, [block.members for block in final.blocks]))
    )
    if final.is_singleton():
        deviations['singleton_partition'].append(float(hb_partition(final)))

    steps = [float(jb_information(partitions[k - 1], partitions[k])) for k in range(1, len(partitions))]
    deviations['ledger_additivity'].append(abs(math.fsum(steps) - float(jb_set_information(final))))
    shannon_steps = [
        float(shannon_information(partitions[k - 1], partitions[k], model, base)) for k in range(1, len(partitions))
    ]
    shannon_drop = float(shannon_partition_entropy(partitions[0], model, base)) - float(
        shannon_partition_entropy(final, model, base)
    )
    deviations['shannon_additivity'].append(abs(math.fsum(shannon_steps) - shannon_drop))

    family = final.as_set_family()
    reordered = partition_for(model, list(reversed(order))).as_set_family()
    deviations['refinement_order'].append(float(family != reordered or family != _signature_family(model, order)))
    return final


def _run_trial(model: DiagnosisModel, seed: int, trial: int, base: int) -> _Deviations:
    rng = np.random.default_rng((seed, trial))
    deviations: _Deviations = defaultdict(list)
    n, t = model.condition_count, model.symptom_count
    probs = model.probs.tolist()

    weights = rng.uniform(0.01, 1.0, size=n).tolist()
    for values in (probs, weights):
        pairwise = float(hb_pairwise(values))
        deviations['pairwise_closed_form'].append(abs(pairwise - float(hb_closed(values))))
        for factor in LINEARITY_FACTORS:
            deviations['linearity'].append(abs(float(hb_pairwise([factor * w for w in values])) - factor * pairwise))
    deviations['pairwise_closed_form'].append(abs(float(hb_pairwise(probs)) - (n - 1)))

    size = int(rng.integers(1, n + 1))
    subset = sorted(rng.choice(n, size=size, replace=False).tolist())
    subset_total = math.fsum(probs[i] for i in subset)
    difference = float(hb_pairwise(probs)) - float(hb_pairwise([probs[i] / subset_total for i in subset]))
    deviations['condition_count_difference'].append(abs(difference - (n - size)))
    deviations['single_condition'].append(float(hb_pairwise([probs[int(rng.integers(n))]])))

    order = rng.permutation(t).tolist()
    k = int(rng.integers(0, t + 1))
    final = _check_chain(model, order[:k], base, deviations)
    if k < t:
        extended = refine_partition(final, model, order[k])
        deviations['set_information_additivity'].append(
            abs(
                float(jb_set_information(extended))
                - float(jb_set_information(final))
                - float(jb_information(final, extended))
            )
        )
    return deviations


def _check_tree(model: DiagnosisModel, criterion: Criterion, deviations: _Deviations):
    tree, report = build_tree(model, criterion)
    probs = model.probs.tolist()

    deviations['ledger_additivity'].append(
        abs(report.total_information - (report.initial_entropy - report.residual_entropy))
    )
    for symptoms, leaf in tree.paths():
        final = partition_for(model, symptoms)
        ledger = math.fsum(step.information for step in path_ledger(tree, model, criterion, leaf))
        if criterion.kind == CriterionKind.COMBINATORIAL:
            expected = float(jb_set_information(final))
        else:
            expected = criterion.entropy(trivial_partition(model), model) - criterion.entropy(final, model)
        deviations['ledger_additivity'].append(abs(ledger - expected))

        rows = {tuple(int(model.relation(r, i)) for r in symptoms) for i in leaf.block}
        deviations['tree_structure'].append(float(len(set(symptoms)) != len(symptoms) or len(rows) != 1))

    for node in tree.decision_nodes():
        before = Partition.from_blocks(model, [node.block])
        for symptom in range(model.symptom_count):
            after = refine_partition(before, model, symptom)
            deviations['pairwise_information'].append(
                abs(float(jb_information(before, after)) - float(jb_pairwise_oracle(model, before, after)))
            )

    distinct_rows = len({tuple(row) for row in model.matrix.values.tolist()}) == model.condition_count
    resolved = report.ambiguous_leaves == 0
    deviations['tree_structure'].append(float(distinct_rows != resolved))
    deviations['partition_entropy'].append(
        abs(report.residual_hb - _pairs_within(probs, [leaf.block for leaf in tree.leaves()]))
    )


def _check_fixed(model: DiagnosisModel, base: int) -> _Deviations:
    deviations: _Deviations = defaultdict(list)
    trivial = trivial_partition(model)
    if model.condition_count == 1:
        deviations['single_condition'].append(float(hb_partition(trivial)))
    deviations['singleton_partition'].append(float(hb_partition(singleton_partition(model))))

    for symptom in range(model.symptom_count):
        induced = induce_partition(model, symptom)
        first, second = jb_dual_forms(induced)
        information = float(jb_information(trivial, induced))
        deviations['dual_forms'].append(max(abs(first - second), abs(first - information)))

    augmented = _with_constant_symptom(model)
    constant_symptoms = [
        r for r in range(augmented.symptom_count) if len(set(augmented.matrix.column(r).tolist())) == 1
    ]
    for criterion in (Criterion(CriterionKind.COMBINATORIAL), Criterion(CriterionKind.SHANNON, base)):
        augmented_trivial = trivial_partition(augmented)
        for symptom in constant_symptoms:
            induced = induce_partition(augmented, symptom)
            deviations['useless_symptom'].append(criterion.information(augmented_trivial, induced, augmented))
        selection = select_next(augmented_trivial, augmented, criterion)
        deviations['useless_symptom'].append(float(selection is not None and selection[0] in constant_symptoms))

        _check_tree(model, criterion, deviations)
    return deviations


def _merge(reports: Iterable[_Deviations]) -> _Deviations:
    merged: _Deviations = defaultdict(list)
    for deviations in reports:
        for identity, values in deviations.items():
            merged[identity].extend(values)
    return merged


def _summarize(deviations: _Deviations) -> List[IdentityCheck]:
    checks = []
    for identity, (description, tolerance) in IDENTITIES.items():
        values = deviations.get(identity, [])
        checks.append(
            IdentityCheck(
                identity=identity,
                description=description,
                checks=len(values),
                max_deviation=float(max(values, default=0.0)),
                tolerance=tolerance,
                violations=sum(value > tolerance for value in values),
            )
        )
    return checks


def _deviations(model: DiagnosisModel, trials: int, seed: int, n_jobs: Optional[int]) -> _Deviations:
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 0:
        raise InvalidArgumentsException(f'the number of trials must be a non-negative integer, got {trials!r}.')
    model = _normalized(model)
    base = model.alphabet.size
    if n_jobs is not None and n_jobs != 1 and trials > 1:
        trial_deviations = Parallel(n_jobs=n_jobs)(
            delayed(_run_trial)(model, seed, trial, base) for trial in range(trials)
        )
    else:
        trial_deviations = [_run_trial(model, seed, trial, base) for trial in range(trials)]
    return _merge([_check_fixed(model, base)] + list(trial_deviations))


def _log_outcome(report: VerificationReport):
    logger.info(
        f'verified {len(report.checks)} identities over {report.instances} instances with seeds '
        f'{list(report.seeds)[:10]}: {len(report.failures)} failures'
    )
    for check in report.failures:
        logger.warning(
            f"identity '{check.identity}' failed in {check.violations} of {check.checks} cases, "
            f'max deviation {check.max_deviation} exceeds tolerance {check.tolerance}'
        )


def check_identities(
    model: DiagnosisModel, trials: int = 100, seed: int = 0, n_jobs: Optional[int] = None
) -> VerificationReport:
    """Verifies the identities between the entropy measures, the partitions and the planner on a model.

    The priors are normalized before verification, so models whose priors sum to one within the validation
    tolerance are checked against the exact identities.

    Parameters
    ----------
    model: DiagnosisModel
        The model to verify the identities on.
    trials: int, default=100
        The number of random symptom orders and weight vectors to draw.
    seed: int, default=0
        The seed of the random trials.
    n_jobs: int, default=None
        The number of jobs running trials concurrently. Sequential when ``None`` or ``1``.
        The report does not depend on this setting.

    Returns
    -------
    report: VerificationReport
        One entry per identity. Failed checks are report entries, not errors.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> report = check_identities(load_worked_example_model(), trials=20, seed=1)
    >>> report.passed
    True
    """
    report = VerificationReport(_summarize(_deviations(model, trials, seed, n_jobs)), seeds=[seed], trials=trials)
    _log_outcome(report)
    return report


def _instance_deviations(spec: InstanceSpec, trials: int) -> _Deviations:
    return _deviations(generate_instance(spec), trials, spec.seed, n_jobs=None)


def check_corpus(specs: Sequence[InstanceSpec], trials: int = 10, n_jobs: Optional[int] = None) -> VerificationReport:
    """Verifies the identities on a corpus of generated models.

    Parameters
    ----------
    specs: Sequence[InstanceSpec]
        The specs of the models to generate. The seed of each spec also seeds its trials.
    trials: int, default=10
        The number of random trials per model.
    n_jobs: int, default=None
        The number of jobs verifying models concurrently. Sequential when ``None`` or ``1``.

    Returns
    -------
    report: VerificationReport
        The aggregated report over all models.
    """
    if len(specs) == 0:
        raise InvalidArgumentsException('cannot verify an empty corpus. Please provide at least one instance spec.')
    if n_jobs is not None and n_jobs != 1:
        instance_deviations = Parallel(n_jobs=n_jobs)(delayed(_instance_deviations)(spec, trials) for spec in specs)
    else:
        instance_deviations = [_instance_deviations(spec, trials) for spec in specs]
    report = VerificationReport(
        _summarize(_merge(instance_deviations)),
        seeds=[spec.seed for spec in specs],
        trials=trials,
        instances=len(specs),
    )
    _log_outcome(report)
    return report
