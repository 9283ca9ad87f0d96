"""Core domain types: activities, alphabets, traces, constraints, processes.

Everything here is immutable after construction and safe to share across
concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

# A trace is an ordered sequence of distinct activity ids; () is the empty
# trace, written as the Greek letter epsilon in rendered output.
Trace = tuple[int, ...]

EMPTY_TRACE: Trace = ()


class ModelError(ValueError):
    """A domain object violates one of its structural invariants."""


class ConstraintKind(str, Enum):
    PREC = "prec"
    RESP = "resp"
    SUCC = "succ"
    WEAKRESP = "weakresp"
    ORRESP = "orresp"
    MUSTEXIST = "mustexist"


# kinds that take exactly one object activity
BINARY_KINDS = frozenset(
    {ConstraintKind.PREC, ConstraintKind.RESP, ConstraintKind.SUCC, ConstraintKind.WEAKRESP}
)


@dataclass(frozen=True)
class Activity:
    """A process activity: a non-negative integer id plus an optional label."""

    id: int
    label: str | None = None

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ModelError(f"activity id must be non-negative, got {self.id}")
        if self.label is not None and not self.label.strip():
            raise ModelError(f"activity {self.id}: label must be non-empty when present")


@dataclass(frozen=True)
class Alphabet:
    """Ordered collection of activities with unique ids."""

    activities: tuple[Activity, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for act in self.activities:
            if act.id in seen:
                raise ModelError(f"duplicate activity id {act.id} in alphabet")
            seen.add(act.id)

    @classmethod
    def of_size(cls, n: int) -> Alphabet:
        """Alphabet of unlabeled activities numbered 1..n."""
        return cls(tuple(Activity(i) for i in range(1, n + 1)))

    @classmethod
    def from_ids(cls, ids: Iterable[int]) -> Alphabet:
        return cls(tuple(Activity(i) for i in ids))

    def ids(self) -> frozenset[int]:
        return frozenset(act.id for act in self.activities)

    def label_of(self, activity_id: int) -> str | None:
        for act in self.activities:
            if act.id == activity_id:
                return act.label
        raise ModelError(f"activity {activity_id} is not in the alphabet")

    def __len__(self) -> int:
        return len(self.activities)

    def __contains__(self, activity_id: int) -> bool:
        return any(act.id == activity_id for act in self.activities)


@dataclass(frozen=True)
class Constraint:
    """A temporal rule over activities, tagged by kind.

    subject is the anchoring activity; objects are the related activities
    (one for the binary kinds, one or more for orresp, none for mustexist).
    """

    kind: ConstraintKind
    subject: int
    objects: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        shown = f"{self.kind.value} with subject {self.subject} and objects {self.objects}"
        if self.subject < 0 or any(o < 0 for o in self.objects):
            raise ModelError(f"negative activity id in {shown}")
        if self.kind in BINARY_KINDS and len(self.objects) != 1:
            raise ModelError(f"{self.kind.value} takes exactly one object ({shown})")
        if self.kind is ConstraintKind.ORRESP and not self.objects:
            raise ModelError(f"orresp needs at least one object ({shown})")
        if self.kind is ConstraintKind.MUSTEXIST and self.objects:
            raise ModelError(f"mustexist takes no objects ({shown})")
        if self.subject in self.objects:
            raise ModelError(f"reflexive constraint not allowed ({shown})")
        if len(set(self.objects)) != len(self.objects):
            raise ModelError(f"duplicate object activity ({shown})")

    def activities(self) -> tuple[int, ...]:
        return (self.subject,) + self.objects

    def __str__(self) -> str:
        if self.kind is ConstraintKind.MUSTEXIST:
            return f"mustexist({self.subject})"
        if self.kind is ConstraintKind.ORRESP:
            inner = ",".join(str(o) for o in self.objects)
            return f"orresp({self.subject},({inner}))"
        return f"{self.kind.value}({self.subject},{self.objects[0]})"


def prec(a: int, b: int) -> Constraint:
    """b may occur only after a has occurred."""
    return Constraint(ConstraintKind.PREC, a, (b,))


def resp(a: int, b: int) -> Constraint:
    """If a occurs, b must occur later."""
    return Constraint(ConstraintKind.RESP, a, (b,))


def succ(a: int, b: int) -> Constraint:
    """prec(a, b) and resp(a, b) combined; kept first-class, desugared at evaluation."""
    return Constraint(ConstraintKind.SUCC, a, (b,))


def weakresp(a: int, b: int) -> Constraint:
    """If a and b both occur, b occurs after a; neither has to occur."""
    return Constraint(ConstraintKind.WEAKRESP, a, (b,))


def orresp(a: int, objects: Iterable[int]) -> Constraint:
    """If a occurs, at least one of the objects occurs later."""
    return Constraint(ConstraintKind.ORRESP, a, tuple(objects))


def mustexist(a: int) -> Constraint:
    """a occurs in the trace."""
    return Constraint(ConstraintKind.MUSTEXIST, a)


@dataclass(frozen=True)
class DeclarativeProcess:
    """An activity alphabet paired with a set of constraints.

    Any ordering of distinct activities that satisfies every constraint is a
    valid execution of the process. The constraint set may be empty, in which
    case every ordering is allowed.
    """

    name: str
    alphabet: Alphabet
    constraints: frozenset[Constraint]

    def __post_init__(self) -> None:
        if not self.name:
            raise ModelError("process name must be non-empty")
        known = self.alphabet.ids()
        for c in self.constraints:
            missing = [a for a in c.activities() if a not in known]
            if missing:
                raise ModelError(
                    f"constraint {c} references activities outside the alphabet: {missing}"
                )

    def sorted_constraints(self) -> tuple[Constraint, ...]:
        """Deterministic constraint ordering for serialization and display."""
        return tuple(sorted(self.constraints, key=lambda c: (c.subject, c.kind.value, c.objects)))


def new_process(
    name: str,
    alphabet: Alphabet,
    constraints: Iterable[Constraint] = (),
) -> DeclarativeProcess:
    """Build and validate a declarative process.

    Rejects constraints referencing activities outside the alphabet; duplicate
    activity ids and reflexive constraints are rejected by the component types.
    """
    return DeclarativeProcess(name, alphabet, frozenset(constraints))


def validate_trace_shape(trace: Trace, alphabet: Alphabet) -> bool:
    """True iff all entries are distinct and every entry is in the alphabet.

    Shape only; constraint satisfaction is a separate question.
    """
    if len(set(trace)) != len(trace):
        return False
    known = alphabet.ids()
    return all(entry in known for entry in trace)
