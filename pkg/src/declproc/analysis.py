"""End-to-end pipeline: enumerate processes, score stakeholders, rank everything."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .enumeration import TraceSet, enumerate_pruned
from .model import DeclarativeProcess
from .preferences import Stakeholder, count_favourable
from .utility import (
    CohortRow,
    RankedRecord,
    UtilityRecord,
    cohort_analysis,
    full_cohort_h,
    make_record,
    rank_processes,
)


@dataclass(frozen=True)
class CollectiveRow:
    """Distance of one process from the ideal over the full stakeholder set."""

    process_name: str
    h: float
    rank: int
    tied: bool


@dataclass(frozen=True)
class AnalysisResult:
    process_names: tuple[str, ...]
    stakeholder_names: tuple[str, ...]
    trace_sets: tuple[TraceSet, ...]
    records: tuple[UtilityRecord, ...]  # stakeholder-major, processes in declared order
    rankings: dict[str, tuple[RankedRecord, ...]]
    collective: tuple[CollectiveRow, ...]
    cohorts: tuple[CohortRow, ...] | None


def run_analysis(
    pairs: Sequence[tuple[DeclarativeProcess, Sequence[Stakeholder]]],
    include_cohorts: bool = False,
) -> AnalysisResult:
    """Enumerate each process once and assemble utilities, rankings and H values.

    Every pair must carry the same stakeholder names in the same order; the
    expressions may differ per process (alphabet-specific variants).
    """
    if not pairs:
        raise ValueError("nothing to analyze")
    process_names = [process.name for process, _ in pairs]
    if len(set(process_names)) != len(process_names):
        raise ValueError(f"duplicate process names: {process_names}")
    name_lists = [tuple(s.name for s in stakeholders) for _, stakeholders in pairs]
    if any(not names for names in name_lists):
        raise ValueError("each process needs at least one stakeholder")
    if len(set(name_lists)) != 1:
        raise ValueError(f"stakeholder names differ between processes: {sorted(set(name_lists))}")
    stakeholder_names = name_lists[0]
    if len(set(stakeholder_names)) != len(stakeholder_names):
        raise ValueError(f"duplicate stakeholder names: {stakeholder_names}")

    trace_sets = tuple(enumerate_pruned(process) for process, _ in pairs)

    records = tuple(
        make_record(
            trace_set.process_name,
            stakeholders[i].name,
            count_favourable(stakeholders[i], trace_set),
            trace_set.count,
        )
        for i in range(len(stakeholder_names))
        for trace_set, (_, stakeholders) in zip(trace_sets, pairs)
    )

    h_by_process = full_cohort_h(records)
    order = sorted(process_names, key=lambda p: (h_by_process[p], process_names.index(p)))
    rank_of = {p: i + 1 for i, p in enumerate(order)}
    collective = tuple(
        CollectiveRow(
            p,
            h_by_process[p],
            rank_of[p],
            tied=sum(1 for q in process_names if h_by_process[q] == h_by_process[p]) > 1,
        )
        for p in process_names
    )

    return AnalysisResult(
        process_names=tuple(process_names),
        stakeholder_names=stakeholder_names,
        trace_sets=trace_sets,
        records=records,
        rankings=rank_processes(records),
        collective=collective,
        cohorts=cohort_analysis(records) if include_cohorts else None,
    )
