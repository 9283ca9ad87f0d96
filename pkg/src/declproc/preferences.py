"""Stakeholder preference expressions over temporal atoms.

A stakeholder holds a binary view of each trace: favourable or not. The view
is a boolean combination (and/or/not) of atoms, where an atom is any of the
constraint templates applied to concrete activities. contains(a) is the same
atom as mustexist(a); both spellings parse to one canonical form.

Atoms referencing activities outside the governing alphabet evaluate as if
the activity never occurs, so a single expression can be scored against
processes with different alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .model import Constraint, Trace
from .model import mustexist as _mustexist
from .semantics import satisfies


class PreferenceExpr:
    """Base class; combine nodes with &, | and ~."""

    def __and__(self, other: PreferenceExpr) -> PreferenceExpr:
        return AndExpr(_merge(self, other, AndExpr))

    def __or__(self, other: PreferenceExpr) -> PreferenceExpr:
        return OrExpr(_merge(self, other, OrExpr))

    def __invert__(self) -> PreferenceExpr:
        return NotExpr(self)


def _merge(left: PreferenceExpr, right: PreferenceExpr, cls: type) -> tuple[PreferenceExpr, ...]:
    # flatten nested same-type nodes so a | b | c is one three-way or
    parts: list[PreferenceExpr] = []
    for node in (left, right):
        if isinstance(node, cls):
            parts.extend(node.children)
        else:
            parts.append(node)
    return tuple(parts)


@dataclass(frozen=True)
class AtomExpr(PreferenceExpr):
    constraint: Constraint


@dataclass(frozen=True)
class AndExpr(PreferenceExpr):
    children: tuple[PreferenceExpr, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("and needs at least two children")


@dataclass(frozen=True)
class OrExpr(PreferenceExpr):
    children: tuple[PreferenceExpr, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("or needs at least two children")


@dataclass(frozen=True)
class NotExpr(PreferenceExpr):
    child: PreferenceExpr


def atom(constraint: Constraint) -> AtomExpr:
    """Wrap a constraint template as a preference atom."""
    return AtomExpr(constraint)


def contains(activity_id: int) -> AtomExpr:
    """The activity occurs in the trace; canonical form of mustexist(a)."""
    return AtomExpr(_mustexist(activity_id))


@dataclass(frozen=True)
class Stakeholder:
    """A named favourability predicate over traces."""

    name: str
    expr: PreferenceExpr


def evaluate(expr: PreferenceExpr, trace: Trace) -> bool:
    if isinstance(expr, AtomExpr):
        return satisfies(trace, expr.constraint)
    if isinstance(expr, AndExpr):
        return all(evaluate(child, trace) for child in expr.children)
    if isinstance(expr, OrExpr):
        return any(evaluate(child, trace) for child in expr.children)
    if isinstance(expr, NotExpr):
        return not evaluate(expr.child, trace)
    raise TypeError(f"not a preference expression: {expr!r}")


def judge(stakeholder: Stakeholder, trace: Trace) -> int:
    """1 if the stakeholder finds the trace favourable, else 0."""
    return 1 if evaluate(stakeholder.expr, trace) else 0


def count_favourable(stakeholder: Stakeholder, traces: Iterable[Trace]) -> int:
    """Sum of the stakeholder's binary judgments over the given traces."""
    return sum(judge(stakeholder, trace) for trace in traces)
