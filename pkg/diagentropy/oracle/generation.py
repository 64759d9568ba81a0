#  License: Apache Software License 2.0

"""Seeded generation of random diagnosis models.

Instances are drawn with the PCG64 generator of :func:`numpy.random.default_rng`, so an InstanceSpec and its
seed fully determine the generated model on every platform.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from diagentropy.exceptions import InvalidSpecException
from diagentropy.model import ConditionSet, DiagnosisModel, DiagnosticMatrix, ValueAlphabet

SIMPLEX_FLOOR = 1e-6


class PriorDistribution(str, Enum):
    """An enum indicating how prior probabilities of generated models are drawn.

    UNIFORM: every condition has probability ``1 / n``.
    RANDOM: normalized exponential draws, a uniform draw from the probability simplex.
    """

    UNIFORM = 'uniform'
    RANDOM = 'random'

    @staticmethod
    def parse(prior: str):
        """Returns a PriorDistribution instance from a string representation."""
        if prior == 'uniform':
            return PriorDistribution.UNIFORM
        elif prior in ('random', 'random-simplex'):
            return PriorDistribution.RANDOM
        else:
            raise InvalidSpecException(
                f"unknown prior distribution '{prior}'. Please provide one of: ['uniform', 'random']."
            )


@dataclass(frozen=True)
class InstanceSpec:
    """The shape of a random diagnosis model and the seed generating it.

    Attributes
    ----------
    n: int
        The number of conditions, at least 1.
    t: int
        The number of symptoms, at least 1.
    lambda_: int
        The alphabet size, at least 2.
    prior: PriorDistribution
        How the prior probabilities are drawn.
    seed: int
        The seed of the generator, a non-negative integer below ``2**64``.
    """

    n: int
    t: int
    lambda_: int = 2
    prior: PriorDistribution = PriorDistribution.RANDOM
    seed: int = 0

    def __post_init__(self):
        """Validates the spec."""
        for name, value, minimum in (('n', self.n, 1), ('t', self.t, 1), ('lambda', self.lambda_, 2)):
            if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
                raise InvalidSpecException(f'{name} must be an integer of at least {minimum}, got {value!r}.')
        if not isinstance(self.prior, PriorDistribution):
            object.__setattr__(self, 'prior', PriorDistribution.parse(self.prior))
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise InvalidSpecException(f'seed must be an integer in [0, 2**64), got {self.seed!r}.')


def _random_priors(rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        draws = rng.exponential(size=n)
        priors = draws / draws.sum()
        if priors.min() >= SIMPLEX_FLOOR:
            return priors


def generate_instance(spec: InstanceSpec) -> DiagnosisModel:
    """Generates a random diagnosis model.

    Random priors are redrawn until every component is at least ``SIMPLEX_FLOOR``. Matrix entries are drawn
    uniformly from the alphabet. Conditions are named ``e1, e2, ...`` and symptoms ``d1, d2, ...``.

    Parameters
    ----------
    spec: InstanceSpec
        The shape and the seed of the instance.

    Returns
    -------
    model: DiagnosisModel
        The generated model. Generating twice from the same InstanceSpec yields identical models.

    Examples
    --------
    >>> model = generate_instance(InstanceSpec(n=4, t=3, lambda_=2, prior=PriorDistribution.UNIFORM, seed=7))
    >>> model.probs.tolist()
    [0.25, 0.25, 0.25, 0.25]
    """
    rng = np.random.default_rng(spec.seed)
    if spec.prior == PriorDistribution.UNIFORM:
        priors = np.full(spec.n, 1 / spec.n)
    else:
        priors = _random_priors(rng, spec.n)
    values = rng.integers(0, spec.lambda_, size=(spec.n, spec.t))

    alphabet = ValueAlphabet(spec.lambda_)
    conditions = ConditionSet([f'e{i + 1}' for i in range(spec.n)], priors.tolist())
    matrix = DiagnosticMatrix(values.tolist(), [f'd{r + 1}' for r in range(spec.t)], alphabet)
    return DiagnosisModel(conditions, matrix)
