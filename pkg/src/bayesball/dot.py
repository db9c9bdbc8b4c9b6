"""Graphviz DOT rendering of networks and traversal marks."""

from __future__ import annotations

import json
from typing import Iterable

from .bayes_ball import MarkState
from .graph import Network, NodeKind

_SHAPES = {
    NodeKind.CHANCE: ["shape=ellipse"],
    NodeKind.DETERMINISTIC: ["shape=ellipse", "peripheries=2"],
    NodeKind.DECISION: ["shape=box"],
    NodeKind.VALUE: ["shape=box"],
}


def _quote(s: str) -> str:
    return json.dumps(s)


def export_dot(net: Network, marks: MarkState | None = None, observed: Iterable[str] | None = None, name: str = "network") -> str:
    """Deterministic DOT text; nodes in topological order, ties by id.

    Observed nodes are filled. With ``marks``, top and bottom marks become
    ``[t]``/``[b]`` label suffixes and visited nodes are drawn bold; the
    observed set then defaults to the one the marks were computed under.
    """
    if observed is None:
        observed = marks.observed if marks is not None else ()
    observed = frozenset(observed)
    lines = [f"digraph {_quote(name)} {{"]
    order = net.topological_order
    for n in order:
        kind = net.kind(n)
        attrs = list(_SHAPES[kind])
        styles = ["rounded"] if kind is NodeKind.VALUE else []
        label = n
        if marks is not None:
            if n in marks.top:
                label += " [t]"
            if n in marks.bottom:
                label += " [b]"
            if n in marks.visited:
                styles.append("bold")
        if n in observed:
            styles.append("filled")
            attrs.append('fillcolor="gray80"')
        if styles:
            attrs.append(f'style="{",".join(styles)}"')
        attrs.insert(0, f"label={_quote(label)}")
        lines.append(f"  {_quote(n)} [{', '.join(attrs)}];")
    rank = {n: i for i, n in enumerate(order)}
    for a, b in sorted(dict.fromkeys(net.arcs), key=lambda arc: (rank[arc[0]], rank[arc[1]])):
        extra = " [style=dashed]" if net.kind(b) is NodeKind.DECISION else ""
        lines.append(f"  {_quote(a)} -> {_quote(b)}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"
