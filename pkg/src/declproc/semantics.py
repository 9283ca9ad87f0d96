"""Finite-trace satisfaction for each constraint kind.

Satisfaction rules, with a and b activity ids and "occurs" meaning the id
appears in the trace (entries are distinct, so positions are unique):

  prec(a,b)        if b occurs, a occurs at an earlier position
  resp(a,b)        if a occurs, b occurs at a later position
  succ(a,b)        prec(a,b) and resp(a,b)
  weakresp(a,b)    if a and b both occur, b occurs later than a
  orresp(a,B)      if a occurs, at least one member of B occurs later
  mustexist(a)     a occurs

An activity absent from the trace simply never occurs, so atoms mentioning
ids outside the governing alphabet evaluate by the same rules (vacuously for
the conditional kinds, false for mustexist). Every kind except mustexist is
satisfied by the empty trace.

safety_status answers a different question: can appending unused activities
still rescue the constraint? A permanently violated prefix can be discarded
by an enumerator without losing any valid trace.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping

from .model import Alphabet, Constraint, ConstraintKind, Trace


class SafetyStatus(Enum):
    PERMANENTLY_VIOLATED = "permanently_violated"
    NOT_YET_VIOLATED = "not_yet_violated"


def _positions(trace: Trace) -> dict[int, int]:
    return {activity: index for index, activity in enumerate(trace)}


def _holds(pos: Mapping[int, int], c: Constraint) -> bool:
    kind = c.kind
    if kind is ConstraintKind.PREC:
        a, b = c.subject, c.objects[0]
        return b not in pos or (a in pos and pos[a] < pos[b])
    if kind is ConstraintKind.RESP:
        a, b = c.subject, c.objects[0]
        return a not in pos or (b in pos and pos[a] < pos[b])
    if kind is ConstraintKind.SUCC:
        a, b = c.subject, c.objects[0]
        prec_ok = b not in pos or (a in pos and pos[a] < pos[b])
        resp_ok = a not in pos or (b in pos and pos[a] < pos[b])
        return prec_ok and resp_ok
    if kind is ConstraintKind.WEAKRESP:
        a, b = c.subject, c.objects[0]
        return a not in pos or b not in pos or pos[a] < pos[b]
    if kind is ConstraintKind.ORRESP:
        a = c.subject
        if a not in pos:
            return True
        return any(b in pos and pos[a] < pos[b] for b in c.objects)
    if kind is ConstraintKind.MUSTEXIST:
        return c.subject in pos
    raise AssertionError(f"unhandled constraint kind {kind!r}")


def satisfies(trace: Trace, constraint: Constraint) -> bool:
    """Does the trace satisfy the constraint? Total over shape-valid traces."""
    return _holds(_positions(trace), constraint)


def satisfies_all(trace: Trace, constraints: Iterable[Constraint]) -> bool:
    """Conjunction over the constraint set; vacuously true when it is empty."""
    pos = _positions(trace)
    return all(_holds(pos, c) for c in constraints)


def safety_status(trace: Trace, constraint: Constraint, alphabet: Alphabet) -> SafetyStatus:
    """Can any extension of the trace by unused alphabet activities satisfy the constraint?

    Returns PERMANENTLY_VIOLATED exactly when no such extension (including the
    trace itself) satisfies it:

      prec(a,b)      b occurred without a before it (nothing can be inserted)
      resp(a,b)      a occurred and b can no longer land after it
      succ(a,b)      either component is beyond repair
      weakresp(a,b)  both occurred in the wrong order
      orresp(a,B)    a occurred and every member of B is spent or unreachable
      mustexist(a)   a can never occur (only possible when a is outside the alphabet)
    """
    pos = _positions(trace)
    if _violated_forever(pos, constraint, alphabet.ids()):
        return SafetyStatus.PERMANENTLY_VIOLATED
    return SafetyStatus.NOT_YET_VIOLATED


def _violated_forever(pos: Mapping[int, int], c: Constraint, alphabet_ids: frozenset[int]) -> bool:
    def appendable(x: int) -> bool:
        # an unused alphabet activity can still be appended; anything else never occurs
        return x in alphabet_ids and x not in pos

    kind = c.kind
    if kind is ConstraintKind.PREC:
        a, b = c.subject, c.objects[0]
        return b in pos and not (a in pos and pos[a] < pos[b])
    if kind is ConstraintKind.RESP:
        a, b = c.subject, c.objects[0]
        if a not in pos:
            return False
        return not (b in pos and pos[a] < pos[b]) and not appendable(b)
    if kind is ConstraintKind.SUCC:
        a, b = c.subject, c.objects[0]
        prec_dead = b in pos and not (a in pos and pos[a] < pos[b])
        resp_dead = a in pos and not (b in pos and pos[a] < pos[b]) and not appendable(b)
        return prec_dead or resp_dead
    if kind is ConstraintKind.WEAKRESP:
        a, b = c.subject, c.objects[0]
        return a in pos and b in pos and pos[b] < pos[a]
    if kind is ConstraintKind.ORRESP:
        a = c.subject
        if a not in pos:
            return False
        if any(b in pos and pos[a] < pos[b] for b in c.objects):
            return False
        return not any(appendable(b) for b in c.objects)
    if kind is ConstraintKind.MUSTEXIST:
        return c.subject not in pos and not appendable(c.subject)
    raise AssertionError(f"unhandled constraint kind {kind!r}")
