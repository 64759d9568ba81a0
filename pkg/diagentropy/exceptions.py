#  License: Apache Software License 2.0

"""Custom exceptions."""
from typing import Optional


class InvalidArgumentsException(BaseException):
    """An exception indicating that the inputs for a function are invalid."""

    pass


class InvalidModelException(BaseException):
    """An exception indicating the diagnosis model data violates one of the model assumptions."""

    pass


class ZeroOrNegativeProbabilityException(InvalidModelException):
    """An exception indicating a condition was given a prior probability that is not strictly positive."""

    pass


class ProbabilitySumOutOfToleranceException(InvalidModelException):
    """An exception indicating the prior probabilities do not sum to one."""

    pass


class MatrixValueOutOfAlphabetException(InvalidModelException):
    """An exception indicating a diagnostic matrix entry falls outside of the symptom value alphabet."""

    pass


class DimensionMismatchException(InvalidModelException):
    """An exception indicating the diagnostic matrix shape does not match the conditions and symptoms."""

    pass


class DuplicateNameException(InvalidModelException):
    """An exception indicating a condition or symptom name occurs more than once."""

    pass


class IndexOutOfRangeException(InvalidArgumentsException):
    """An exception indicating a symptom, condition or block index does not exist."""

    pass


class SymptomAlreadyAppliedException(InvalidArgumentsException):
    """An exception indicating a partition was refined by a symptom that already induced it."""

    pass


class EmptyInputException(InvalidArgumentsException):
    """An exception indicating a measure was requested for an empty list of values."""

    pass


class NegativeProbabilityException(InvalidArgumentsException):
    """An exception indicating a probability list contains negative entries."""

    pass


class NonpositiveWeightException(InvalidArgumentsException):
    """An exception indicating a weight list contains zero or negative entries."""

    pass


class InvalidBlockException(InvalidArgumentsException):
    """An exception indicating a partition block has a non-positive probability or size."""

    pass


class NotARefinementException(InvalidArgumentsException):
    """An exception indicating a partition is not a refinement of the partition it is compared to."""

    pass


class TreeModelMismatchException(InvalidArgumentsException):
    """An exception indicating a diagnosis tree was not built over the given model."""

    pass


class ValueOutOfAlphabetException(InvalidArgumentsException):
    """An exception indicating an observed symptom value lies outside of the value alphabet."""

    pass


class InvalidSpecException(InvalidArgumentsException):
    """An exception indicating an InstanceSpec describes a model that cannot be generated."""

    pass


class InstanceTooLargeException(InvalidArgumentsException):
    """An exception indicating a model is too large for exhaustive search."""

    pass


class ContradictoryObservationException(BaseException):
    """An exception indicating an observed value is impossible for every condition that remains."""

    pass


class ParseException(BaseException):
    """An exception indicating a document could not be parsed into the expected structure."""

    def __init__(self, message: str, path: Optional[str] = None):
        """Creates a new ParseException.

        Parameters
        ----------
        message: str
            A description of the problem.
        path: str, default=None
            The location of the offending element, e.g. ``$.conditions[2].p`` or ``line 4``.
        """
        super().__init__(f'{path}: {message}' if path else message)
        self.path = path
