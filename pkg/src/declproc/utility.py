"""Stakeholder utilities, distances from the ideal vector, and rankings.

The utility of a process for a stakeholder is

    u = log(1 + favourable) / log(1 + valid)

where valid is the number of valid traces and favourable how many of them the
stakeholder judges favourable. The ratio makes the logarithm base irrelevant;
natural log is used internally. It is 0 exactly when nothing is favourable, 1
exactly when everything is, and successive favourable traces contribute less
and less. Equivalently u is the exponent with (1 + favourable) =
(1 + valid)^u, which is what makes utilities comparable across processes with
very different trace counts.

A cohort of stakeholders is scored by the Euclidean distance of its utility
vector from the all-ones ideal: 0 means maximally favourable for everyone,
sqrt(k) maximally unfavourable for all k members.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class UtilityDomainError(ValueError):
    """The utility formula is undefined for the given counts."""


def utility(favourable: int, valid: int) -> float:
    """log(1+favourable)/log(1+valid); requires 0 <= favourable <= valid, valid >= 1."""
    if valid < 1:
        raise UtilityDomainError(
            "utility is undefined for a process with no valid traces (valid must be >= 1)"
        )
    if not 0 <= favourable <= valid:
        raise UtilityDomainError(f"favourable count {favourable} outside [0, {valid}]")
    return math.log1p(favourable) / math.log1p(valid)


def implied_exponent(favourable: int, valid: int) -> float:
    """The exponent u with (1+favourable) = (1+valid)^u.

    Identical to utility; exposed under the benchmarking name so reports can
    translate a utility range (alpha, beta) into favourable-count bounds
    valid^alpha <= favourable <= valid^beta.
    """
    return utility(favourable, valid)


def favourable_count_for(exponent: float, valid: int) -> int:
    """Invert the utility: the favourable count whose utility is the exponent."""
    if valid < 1:
        raise ValueError("valid must be >= 1")
    return round(math.expm1(exponent * math.log1p(valid)))


def h_distance(utilities: Sequence[float]) -> float:
    """Euclidean distance of a utility vector from the all-ones ideal point."""
    if not utilities:
        raise ValueError("h_distance needs at least one utility")
    for u in utilities:
        if not 0.0 <= u <= 1.0:
            raise ValueError(f"utility {u} outside [0, 1]")
    return math.sqrt(sum((1.0 - u) ** 2 for u in utilities))


@dataclass(frozen=True)
class UtilityRecord:
    """One (process, stakeholder) cell: counts plus the derived utility."""

    process_name: str
    stakeholder_name: str
    valid_count: int
    favourable_count: int
    utility: float


def make_record(process_name: str, stakeholder_name: str, favourable: int, valid: int) -> UtilityRecord:
    return UtilityRecord(process_name, stakeholder_name, valid, favourable, utility(favourable, valid))


@dataclass(frozen=True)
class RankedRecord:
    """A utility record with its rank among the stakeholder's processes (1 = best)."""

    record: UtilityRecord
    rank: int
    tied: bool


def rank_processes(records: Iterable[UtilityRecord]) -> dict[str, tuple[RankedRecord, ...]]:
    """Rank processes per stakeholder, descending by utility.

    Ties keep declaration order and are flagged. Output preserves the input
    order of both stakeholders and the records within each stakeholder.
    """
    grouped: dict[str, list[UtilityRecord]] = {}
    for record in records:
        grouped.setdefault(record.stakeholder_name, []).append(record)

    ranked: dict[str, tuple[RankedRecord, ...]] = {}
    for stakeholder, rows in grouped.items():
        order = sorted(range(len(rows)), key=lambda i: (-rows[i].utility, i))
        rank_of = {i: position + 1 for position, i in enumerate(order)}
        ranked[stakeholder] = tuple(
            RankedRecord(
                rows[i],
                rank_of[i],
                tied=any(j != i and rows[j].utility == rows[i].utility for j in range(len(rows))),
            )
            for i in range(len(rows))
        )
    return ranked


@dataclass(frozen=True)
class CohortRow:
    """H values of one stakeholder subset across all processes.

    h_values keeps process declaration order; argmin_process attains the
    smallest H, earliest process winning exact ties (flagged).
    """

    subset: tuple[str, ...]
    h_values: tuple[tuple[str, float], ...]
    argmin_process: str
    argmin_tied: bool

    def h_for(self, process_name: str) -> float:
        for name, value in self.h_values:
            if name == process_name:
                return value
        raise KeyError(process_name)


def cohort_analysis(records: Sequence[UtilityRecord]) -> tuple[CohortRow, ...]:
    """H of every non-empty stakeholder subset, for every process.

    Subsets are enumerated by size, then lexicographically by stakeholder
    declaration order, giving 2^k - 1 rows for k stakeholders. Every
    (stakeholder, process) pair must be present in the records.
    """
    stakeholders = _first_appearance(r.stakeholder_name for r in records)
    processes = _first_appearance(r.process_name for r in records)
    if not stakeholders or not processes:
        raise ValueError("cohort analysis needs at least one stakeholder and one process")

    utilities: dict[tuple[str, str], float] = {}
    for r in records:
        utilities[(r.stakeholder_name, r.process_name)] = r.utility
    missing = [
        (s, p) for s in stakeholders for p in processes if (s, p) not in utilities
    ]
    if missing:
        raise ValueError(f"missing utility records for pairs: {missing}")

    rows = []
    for size in range(1, len(stakeholders) + 1):
        for subset in itertools.combinations(stakeholders, size):
            h_values = tuple(
                (p, h_distance([utilities[(s, p)] for s in subset])) for p in processes
            )
            best_name, best_h = min(h_values, key=lambda pair: pair[1])
            tied = sum(1 for _, h in h_values if h == best_h) > 1
            rows.append(CohortRow(subset, h_values, best_name, tied))
    return tuple(rows)


def _first_appearance(names: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for name in names:
        seen.setdefault(name)
    return tuple(seen)


def full_cohort_h(records: Sequence[UtilityRecord]) -> Mapping[str, float]:
    """H over the complete stakeholder set, keyed by process in declaration order."""
    stakeholders = _first_appearance(r.stakeholder_name for r in records)
    processes = _first_appearance(r.process_name for r in records)
    utilities = {(r.stakeholder_name, r.process_name): r.utility for r in records}
    return {
        p: h_distance([utilities[(s, p)] for s in stakeholders]) for p in processes
    }
