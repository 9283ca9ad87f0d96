"""Enumerate all valid traces of a declarative process.

Two engines are provided. enumerate_bruteforce generates every sequence of
distinct alphabet activities and filters it; it is the oracle. enumerate_pruned
walks the prefix tree depth-first and cuts a branch as soon as some constraint
is permanently violated, which is sound because a permanently violated prefix
has no satisfying extension. Valid traces are not prefix-closed, so a prefix
is emitted only when it satisfies every constraint itself.

Output is canonical: ascending by length, then lexicographically by the id
sequence. Enumeration work may be split across workers as long as the merged
result is sorted the same way; the implementation here is single-threaded,
which makes the canonical output byte-reproducible for free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .model import DeclarativeProcess, Trace
from .semantics import SafetyStatus, safety_status, satisfies_all

DEFAULT_BRUTEFORCE_CAP = 10


class EnumerationCapExceeded(RuntimeError):
    """Alphabet too large for exhaustive generation under the configured cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(
            f"alphabet has {size} activities; brute-force enumeration is capped at {cap} "
            f"(the unconstrained 10-activity space already holds 9,864,101 sequences)"
        )
        self.size = size
        self.cap = cap


def canonical_key(trace: Trace) -> tuple[int, Trace]:
    return (len(trace), trace)


@dataclass(frozen=True)
class TraceSet:
    """Canonically ordered, duplicate-free collection of valid traces."""

    process_name: str
    traces: tuple[Trace, ...]

    def __post_init__(self) -> None:
        for earlier, later in zip(self.traces, self.traces[1:]):
            if canonical_key(earlier) >= canonical_key(later):
                raise ValueError("traces must be strictly increasing in canonical order")

    @property
    def count(self) -> int:
        return len(self.traces)

    def __iter__(self) -> Iterator[Trace]:
        return iter(self.traces)

    def __len__(self) -> int:
        return len(self.traces)

    def __contains__(self, trace: Trace) -> bool:
        return trace in self.traces


def enumerate_bruteforce(
    process: DeclarativeProcess, cap: int = DEFAULT_BRUTEFORCE_CAP
) -> TraceSet:
    """Generate all partial permutations of the alphabet and keep the valid ones.

    Refuses alphabets larger than cap activities; the space grows as
    sum over k of n!/(n-k)!.
    """
    ids = sorted(process.alphabet.ids())
    if len(ids) > cap:
        raise EnumerationCapExceeded(len(ids), cap)
    constraints = tuple(process.constraints)
    found = [
        candidate
        for k in range(len(ids) + 1)
        for candidate in itertools.permutations(ids, k)
        if satisfies_all(candidate, constraints)
    ]
    # permutations of sorted input come out length-then-lexicographic already
    return TraceSet(process.name, tuple(found))


def _iter_valid(process: DeclarativeProcess) -> Iterator[Trace]:
    """Depth-first walk of the prefix tree, yielding valid traces in visit order."""
    constraints = tuple(process.constraints)
    alphabet = process.alphabet
    ids = tuple(sorted(alphabet.ids()))

    def walk(prefix: Trace, remaining: tuple[int, ...]) -> Iterator[Trace]:
        if satisfies_all(prefix, constraints):
            yield prefix
        for i, activity in enumerate(remaining):
            candidate = prefix + (activity,)
            if any(
                safety_status(candidate, c, alphabet) is SafetyStatus.PERMANENTLY_VIOLATED
                for c in constraints
            ):
                continue
            yield from walk(candidate, remaining[:i] + remaining[i + 1 :])

    return walk((), ids)


def enumerate_pruned(process: DeclarativeProcess) -> TraceSet:
    """Safety-pruned enumeration; agrees with enumerate_bruteforce wherever both run."""
    found = sorted(_iter_valid(process), key=canonical_key)
    return TraceSet(process.name, tuple(found))


def count_valid(process: DeclarativeProcess) -> int:
    """Number of valid traces, streamed without materializing the trace list."""
    return sum(1 for _ in _iter_valid(process))
