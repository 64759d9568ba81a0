#  License: Apache Software License 2.0

"""diagentropy dataset module."""

from .datasets import load_model_file, load_two_condition_model, load_worked_example_model
