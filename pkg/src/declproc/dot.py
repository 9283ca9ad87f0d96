"""Graphviz export of a process as an edge-labelled constraint graph."""

from __future__ import annotations

from .model import ConstraintKind, DeclarativeProcess


def export_dot(process: DeclarativeProcess) -> str:
    """One node per activity, one labelled edge per binary constraint.

    orresp contributes one edge per object, each carrying the grouped label;
    mustexist marks the node itself. Nodes and edges come out in a fixed
    order, so equal processes export byte-identical graphs.
    """
    must_exist = {
        c.subject for c in process.constraints if c.kind is ConstraintKind.MUSTEXIST
    }
    lines = [f'digraph "{process.name}" {{', "  rankdir=LR;"]
    for act in process.alphabet.activities:
        label = f"{act.id}: {act.label}" if act.label else str(act.id)
        extras = ""
        if act.id in must_exist:
            label += " [must occur]"
            extras = ", peripheries=2"
        lines.append(f'  {act.id} [label="{_escape(label)}"{extras}];')
    for c in process.sorted_constraints():
        if c.kind is ConstraintKind.MUSTEXIST:
            continue
        if c.kind is ConstraintKind.ORRESP:
            group = ",".join(str(o) for o in c.objects)
            for obj in c.objects:
                lines.append(f'  {c.subject} -> {obj} [label="orresp({group})"];')
        else:
            lines.append(f'  {c.subject} -> {c.objects[0]} [label="{c.kind.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
