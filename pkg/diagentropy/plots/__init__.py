#  License: Apache Software License 2.0

"""Module containing plotting implementations."""

from ._ledger_plot import ledger_plot
from .colors import Colors
