#  License: Apache Software License 2.0

"""Module containing the shared value type and numerical tolerances of the entropy measures."""
from dataclasses import dataclass
from enum import Enum

from diagentropy.exceptions import InvalidArgumentsException

IDENTITY_TOLERANCE = 1e-12
ACCUMULATED_TOLERANCE = 1e-9
NEGATIVE_CLAMP_TOLERANCE = 1e-12


class MeasureKind(str, Enum):
    """An enum indicating which family of measures a value belongs to.

    SHANNON: Shannon entropy and information, expressed in λ-ary units.
    COMBINATORIAL: the combinatorial-probabilistic entropy and information, dimensionless.
    """

    SHANNON = 'shannon'
    COMBINATORIAL = 'combinatorial'


@dataclass(frozen=True)
class MeasureValue:
    """A non-negative entropy or information value."""

    value: float
    kind: MeasureKind

    def __post_init__(self):
        """Rejects negative values."""
        if self.value < 0:
            raise InvalidArgumentsException(f'{self.kind.value} measures cannot be negative, got {self.value}.')

    def __float__(self):
        """Returns the raw value."""
        return float(self.value)


def clamp_difference(difference: float, tolerance: float = NEGATIVE_CLAMP_TOLERANCE) -> float:
    """Clamps small negative differences caused by floating point noise to zero.

    Differences below ``-tolerance`` indicate a real problem and raise an ``InvalidArgumentsException``.
    """
    if difference >= 0:
        return difference
    if difference >= -tolerance:
        return 0.0
    raise InvalidArgumentsException(
        f'information difference {difference} is negative beyond tolerance {tolerance}. '
        'Please ensure the second partition refines the first.'
    )
