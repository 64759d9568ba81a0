#  License: Apache Software License 2.0

"""Utility module offering the bundled example models for quick experimentation."""

from importlib import resources

from diagentropy.documents import parse_model
from diagentropy.model import DiagnosisModel

DATA_MODULE = "diagentropy.datasets.data"


def load_model_file(local_file: str, format: str = 'json') -> DiagnosisModel:
    """Loads a model document from within the diagentropy package.

    Parameters
    ----------
    local_file : str, required
        string with the name of the model document to be loaded.
    format : str, default='json'
        The format of the document, ``'json'`` or ``'csv'``.

    Returns
    -------
    model: DiagnosisModel
        The validated model.
    """
    text = resources.read_text(DATA_MODULE, local_file, encoding='utf-8')
    return parse_model(text, format=format, lambda_=2 if format == 'csv' else None)


def load_two_condition_model() -> DiagnosisModel:
    """Loads the model of two equiprobable conditions told apart by a single binary symptom.

    Its Shannon entropy in base 2 is exactly 1.

    Examples
    --------
    >>> from diagentropy.datasets import load_two_condition_model
    >>> model = load_two_condition_model()
    """
    return load_model_file('two_condition_model.json')


def load_worked_example_model(format: str = 'json') -> DiagnosisModel:
    """Loads a model of five conditions, one of them far more probable than the others, and three binary symptoms.

    The conditions have probabilities 0.05, 0.05, 0.84, 0.03 and 0.03 and the binary symptom codes 000, 001, 010,
    011 and 100. At least three symptoms are needed to tell all conditions apart.

    Parameters
    ----------
    format : str, default='json'
        Load the JSON or the CSV version of the model document. Both describe the same model.

    Examples
    --------
    >>> from diagentropy.datasets import load_worked_example_model
    >>> model = load_worked_example_model()
    >>> model.probs.tolist()
    [0.05, 0.05, 0.84, 0.03, 0.03]
    """
    return load_model_file(f'worked_example_model.{format}', format=format)
