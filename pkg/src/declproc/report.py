"""Render trace sets and analysis results as aligned text, CSV, or JSON lines.

Utilities and H values are printed with six decimals; counts are exact. CSV
blocks use a comma delimiter with a header row, and multi-section CSV output
separates the sections with one blank line. All three formats are byte
deterministic for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .analysis import AnalysisResult
from .enumeration import TraceSet
from .model import Trace

FORMATS = ("table", "csv", "jsonl")


def format_trace(trace: Trace) -> str:
    if not trace:
        return "ε"
    return "(" + ", ".join(str(a) for a in trace) + ")"


def _trace_cell(trace: Trace) -> str:
    return " ".join(str(a) for a in trace)


def _csv_block(header: list[str], rows: Iterable[list]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _aligned(header: list[str], rows: list[list[str]], indent: str = "  ") -> list[str]:
    table = [header] + rows
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return [indent + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]


def _jsonl(objects: Iterable[dict]) -> str:
    return "".join(json.dumps(obj, sort_keys=True) + "\n" for obj in objects)


def render_traces(trace_set: TraceSet, fmt: str) -> str:
    if fmt == "csv":
        return _csv_block(
            ["index", "length", "trace"],
            [[i, len(t), _trace_cell(t)] for i, t in enumerate(trace_set, start=1)],
        )
    if fmt == "jsonl":
        return _jsonl(
            {"index": i, "length": len(t), "process": trace_set.process_name, "trace": list(t)}
            for i, t in enumerate(trace_set, start=1)
        )
    width = len(str(trace_set.count))
    lines = [f"valid traces of {trace_set.process_name} ({trace_set.count})"]
    lines += [f"  {i:>{width}}. {format_trace(t)}" for i, t in enumerate(trace_set, start=1)]
    return "\n".join(lines) + "\n"


def render_count(process_name: str, count: int, fmt: str) -> str:
    if fmt == "csv":
        return _csv_block(["process", "valid"], [[process_name, count]])
    if fmt == "jsonl":
        return _jsonl([{"process": process_name, "valid": count}])
    return f"{count}\n"


def render_analysis(result: AnalysisResult, fmt: str) -> str:
    sections = [_render_utilities(result, fmt)]
    if result.cohorts is not None:
        sections.append(_render_collective(result, fmt))
        sections.append(_render_cohorts(result, fmt))
    if fmt == "jsonl":
        return "".join(sections)
    return "\n".join(sections)


def _render_utilities(result: AnalysisResult, fmt: str) -> str:
    rows = []
    for stakeholder in result.stakeholder_names:
        for ranked in result.rankings[stakeholder]:
            r = ranked.record
            rows.append(
                {
                    "stakeholder": stakeholder,
                    "process": r.process_name,
                    "valid": r.valid_count,
                    "favourable": r.favourable_count,
                    "utility": f"{r.utility:.6f}",
                    "rank": ranked.rank,
                }
            )
    if fmt == "csv":
        header = ["stakeholder", "process", "valid", "favourable", "utility", "rank"]
        return _csv_block(header, [[row[h] for h in header] for row in rows])
    if fmt == "jsonl":
        return _jsonl({"kind": "utility", **row, "utility": float(row["utility"])} for row in rows)
    text_rows = [
        [row["stakeholder"], row["process"], str(row["valid"]), str(row["favourable"]),
         row["utility"], str(row["rank"])]
        for row in rows
    ]
    header = ["stakeholder", "process", "valid", "favourable", "utility", "rank"]
    return "\n".join(["stakeholder utilities"] + _aligned(header, text_rows)) + "\n"


def _render_collective(result: AnalysisResult, fmt: str) -> str:
    if fmt == "csv":
        return _csv_block(
            ["process", "h", "rank"],
            [[row.process_name, f"{row.h:.6f}", row.rank] for row in result.collective],
        )
    if fmt == "jsonl":
        return _jsonl(
            {"kind": "collective", "process": row.process_name, "h": round(row.h, 6),
             "rank": row.rank}
            for row in result.collective
        )
    rows = [[row.process_name, f"{row.h:.6f}", str(row.rank)] for row in result.collective]
    return "\n".join(
        ["collective distance from the ideal utilities"] + _aligned(["process", "h", "rank"], rows)
    ) + "\n"


def _subset_cell(subset: tuple[str, ...]) -> str:
    return "{" + ",".join(subset) + "}"


def _render_cohorts(result: AnalysisResult, fmt: str) -> str:
    assert result.cohorts is not None
    if fmt == "csv":
        header = ["subset", *result.process_names, "best"]
        rows = [
            [_subset_cell(row.subset), *(f"{h:.6f}" for _, h in row.h_values), row.argmin_process]
            for row in result.cohorts
        ]
        return _csv_block(header, rows)
    if fmt == "jsonl":
        return _jsonl(
            {
                "kind": "cohort",
                "subset": list(row.subset),
                "h": {name: round(h, 6) for name, h in row.h_values},
                "best": row.argmin_process,
            }
            for row in result.cohorts
        )
    rows = [
        [_subset_cell(row.subset), *(f"{h:.6f}" for _, h in row.h_values), row.argmin_process]
        for row in result.cohorts
    ]
    header = ["subset", *result.process_names, "best"]
    return "\n".join(["h by stakeholder subset"] + _aligned(header, rows)) + "\n"
