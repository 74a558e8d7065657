"""
DOT View
Graphviz text for a crystal graph with an optional subset overlay

    dot -Tpng -O crystal.gv
"""


def _quote(text):
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(graph, subset=None):
    """
    Render a crystal graph as a DOT digraph

    Nodes appear in graph order and are labelled by weight; extremal nodes
    are double circles, subset members are filled, edges carry their
    color i.

    Args:
        graph (CrystalGraph): the crystal
        subset (BaseSubset, optional): members to highlight

    Returns:
        str: DOT text ending in a newline
    """
    extremal = set(graph.extremal_map()) if len(graph.highest_weight_ids) == 1 else set()
    members = subset.members if subset is not None else frozenset()

    lines = ["digraph crystal {", "\trankdir=TB;", "\tnode [shape=circle];"]
    for b in graph.elements:
        attrs = [f"label={_quote(tuple(graph.wt(b)))}", f"tooltip={_quote(b)}"]
        if b in extremal:
            attrs.append("shape=doublecircle")
        if b in members:
            attrs.append("style=filled")
            attrs.append('fillcolor="lightblue"')
        lines.append(f"\t{_quote(b)} [{', '.join(attrs)}];")
    for src, node, dst in graph.edges():
        lines.append(f"\t{_quote(src)} -> {_quote(dst)} [label={_quote(node)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
