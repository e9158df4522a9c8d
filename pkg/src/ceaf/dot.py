"""Deterministic DOT rendering of frameworks and coalition views.

One node per argument instance, labelled ``id (capacity)``.  One edge per
minimal defined attack: an attack entry is drawn only if no proper subset of
its attackers already resolves against the same target.  Group attacks are
routed through a point-shaped junction node so the graph stays a plain
digraph.  Node and edge order is sorted, so output is byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .core import Arg, Framework, _subsets
from . import semantics


def _node_name(a: Arg) -> str:
    return f"{a.id}_{a.capacity}"


def _label(a: Arg) -> str:
    return f"{a.id} ({a.capacity})"


def minimal_attacks(fw: Framework, nodes: frozenset, strength_of) -> list:
    """Defined attacks among ``nodes`` with minimal attacker sets: every
    resolving singleton, plus listed group entries none of whose proper
    subsets resolves."""
    out = []
    for source in sorted(nodes):
        for target in sorted(nodes):
            if source == target:
                continue
            v = strength_of(frozenset((source,)), target)
            if v is not None:
                out.append((frozenset((source,)), target, v))
    for (attackers, target), _ in sorted(
        fw.strengths._lookup.items(), key=lambda kv: (sorted(kv[0][0]), kv[0][1])
    ):
        if len(attackers) < 2 or target not in nodes or not attackers <= nodes:
            continue
        v = strength_of(attackers, target)
        if v is None:
            continue
        if any(
            strength_of(sub, target) is not None
            for sub in _subsets(attackers)
            if sub != attackers
        ):
            continue
        out.append((attackers, target, v))
    return out


def export_dot(fw: Framework, view_of: Optional[Iterable[Arg]] = None) -> str:
    """Render the whole framework, or the view of a conflict-eliminable set."""
    if view_of is None:
        nodes = frozenset(fw.arguments)
        strength_of = fw.strengths.strength
        title = "framework"
    else:
        vw = semantics.view(fw, frozenset(view_of))
        nodes = vw.arguments
        strength_of = vw.strength
        title = "view"

    lines = [f"digraph {title} {{"]
    lines.append('  node [shape=ellipse];')
    for a in sorted(nodes):
        lines.append(f'  "{_node_name(a)}" [label="{_label(a)}"];')
    junction = 0
    for attackers, target, strength in minimal_attacks(fw, nodes, strength_of):
        if len(attackers) == 1:
            (source,) = attackers
            lines.append(
                f'  "{_node_name(source)}" -> "{_node_name(target)}"'
                f' [label="{strength}"];'
            )
        else:
            junction += 1
            jname = f"join_{junction}"
            lines.append(f'  "{jname}" [shape=point];')
            for source in sorted(attackers):
                lines.append(f'  "{_node_name(source)}" -> "{jname}" [dir=none];')
            lines.append(f'  "{jname}" -> "{_node_name(target)}" [label="{strength}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
