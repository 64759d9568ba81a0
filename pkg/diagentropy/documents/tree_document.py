#  License: Apache Software License 2.0

"""Reading and writing tree documents.

A test node is written as ``{"test": <symptom name>, "branches": {"<value>": <node>, ...}}``, a leaf as
``{"leaf": [<condition names>], "status": "resolved" | "ambiguous", "posterior": {<condition name>: <p>}}``.
Keys are sorted and probabilities rounded to twelve significant digits, so equal trees serialize to identical text.
"""
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from diagentropy.documents.model_document import _parse_json, canonical_float, read_document
from diagentropy.exceptions import ParseException
from diagentropy.model import DiagnosisModel
from diagentropy.planner import DecisionNode, DiagnosisTree, LeafNode, Node, make_leaf, validate_tree


def _node_document(tree: DiagnosisTree, node: Node) -> Dict[str, Any]:
    if isinstance(node, LeafNode):
        names = [tree.condition_names[i] for i in node.block]
        return {
            'leaf': names,
            'status': node.status.value,
            'posterior': {name: canonical_float(q) for name, q in zip(names, node.posterior)},
        }
    return {
        'test': tree.symptom_names[node.symptom],
        'branches': {str(value): _node_document(tree, child) for value, child in node.branches},
    }


def tree_document(tree: DiagnosisTree) -> Dict[str, Any]:
    """Returns the document layout of a tree."""
    return _node_document(tree, tree.root)


def serialize_tree(tree: DiagnosisTree) -> str:
    """Serializes a tree into a canonical JSON tree document with sorted keys."""
    return json.dumps(tree_document(tree), sort_keys=True, indent=2)


def _condition_index(model: DiagnosisModel, name: Any, path: str) -> int:
    if name not in model.conditions.names:
        raise ParseException(f'unknown condition {name!r}', path=path)
    return model.conditions.index_of(name)


def _parse_node(raw: Any, model: DiagnosisModel, depth: int, path: str) -> Node:
    if not isinstance(raw, Mapping):
        raise ParseException('expected an object', path=path)

    if 'leaf' in raw:
        names = raw['leaf']
        if not isinstance(names, list) or len(names) == 0:
            raise ParseException('expected a non-empty list of condition names', path=f'{path}.leaf')
        block = [_condition_index(model, name, f'{path}.leaf[{k}]') for k, name in enumerate(names)]
        return make_leaf(model, block, depth)

    if 'test' not in raw:
        raise ParseException("expected a field 'test' or 'leaf'", path=path)
    symptom = raw['test']
    if symptom not in model.matrix.symptom_names:
        raise ParseException(f'unknown symptom {symptom!r}', path=f'{path}.test')
    branches = raw.get('branches')
    if not isinstance(branches, Mapping) or len(branches) == 0:
        raise ParseException('expected a non-empty object of branches', path=f'{path}.branches')

    children: List = []
    for key, child in branches.items():
        try:
            value = int(key)
        except ValueError:
            raise ParseException(f'branch labels must be symptom values, got {key!r}', path=f'{path}.branches')
        children.append((value, _parse_node(child, model, depth + 1, f'{path}.branches["{key}"]')))
    children.sort(key=lambda branch: branch[0])

    members = tuple(sorted(i for _, child in children for i in child.block))
    return DecisionNode(
        symptom=model.matrix.index_of(symptom),
        block=members,
        probability=math.fsum(model.probs[list(members)]),
        depth=depth,
        branches=tuple(children),
    )


def parse_tree(text: str, model: DiagnosisModel) -> DiagnosisTree:
    """Parses a tree document over a model.

    Probabilities and posteriors are recomputed from the model, the values stored in the document are not used.

    Parameters
    ----------
    text: str
        The tree document text.
    model: DiagnosisModel
        The model the tree was built over.

    Returns
    -------
    tree: DiagnosisTree

    Raises
    ------
    ParseException
        When the document is malformed or refers to unknown conditions or symptoms.
    TreeModelMismatchException
        When the tree does not describe a diagnosis over the model.
    """
    tree = DiagnosisTree.for_model(_parse_node(_parse_json(text), model, 0, '$'), model)
    validate_tree(tree, model)
    return tree


def read_tree(path: Union[str, Path], model: DiagnosisModel) -> DiagnosisTree:
    """Reads a tree document from a file and parses it over a model."""
    return parse_tree(read_document(path), model)
