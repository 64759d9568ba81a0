#  License: Apache Software License 2.0

"""Export of diagnosis trees to the Graphviz DOT language."""
from typing import List

from diagentropy.planner import DiagnosisTree, LeafNode, Node


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"').replace('\n', '\\n') + '"'


def export_dot(tree: DiagnosisTree) -> str:
    """Renders a tree as a directed graph in the DOT language.

    Test nodes are drawn as boxes labeled with their symptom, leaves as ellipses labeled with their conditions and
    status, edges are labeled with the symptom values. Nodes are numbered in pre-order, so a tree always renders to
    the same text.

    Examples
    --------
    >>> from diagentropy import build_tree, load_two_condition_model
    >>> tree, _ = build_tree(load_two_condition_model())
    >>> print(export_dot(tree))
    digraph diagnosis {
      n0 [shape=box, label="d1"];
      n1 [shape=ellipse, label="e1\\nresolved"];
      n2 [shape=ellipse, label="e2\\nresolved"];
      n0 -> n1 [label="0"];
      n0 -> n2 [label="1"];
    }
    """
    declarations: List[str] = []
    edges: List[str] = []

    def _visit(node: Node) -> str:
        identifier = f'n{len(declarations)}'
        if isinstance(node, LeafNode):
            names = ', '.join(tree.condition_names[i] for i in node.block)
            label = _quote(f'{names}\n{node.status.value}')
            declarations.append(f'  {identifier} [shape=ellipse, label={label}];')
            return identifier
        declarations.append(f'  {identifier} [shape=box, label={_quote(tree.symptom_names[node.symptom])}];')
        for value, child in node.branches:
            edges.append(f'  {identifier} -> {_visit(child)} [label="{value}"];')
        return identifier

    _visit(tree.root)
    return '\n'.join(['digraph diagnosis {'] + declarations + edges + ['}'])
