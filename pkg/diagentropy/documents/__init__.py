#  License: Apache Software License 2.0

"""Document formats for models and trees: JSON and CSV model documents, JSON tree documents and DOT export."""

from .dot import export_dot
from .model_document import (
    SIGNIFICANT_DIGITS,
    canonical_float,
    format_number,
    model_document,
    parse_model,
    read_document,
    read_model,
    serialize_model,
)
from .tree_document import parse_tree, read_tree, serialize_tree, tree_document
