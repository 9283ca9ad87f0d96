from __future__ import annotations

import csv
import io
import json

import pytest

from declproc.analysis import run_analysis
from declproc.dot import export_dot
from declproc.enumeration import enumerate_pruned
from declproc.library import fdap, fdap_m2
from declproc.model import Alphabet, mustexist, new_process, prec
from declproc.report import format_trace, render_analysis, render_count, render_traces


@pytest.fixture(scope="module")
def tiny_trace_set():
    return enumerate_pruned(new_process("free", Alphabet.of_size(2)))


def test_format_trace_uses_epsilon_for_empty():
    assert format_trace(()) == "ε"
    assert format_trace((1, 9, 10)) == "(1, 9, 10)"


def test_trace_table_rendering(tiny_trace_set):
    assert render_traces(tiny_trace_set, "table") == (
        "valid traces of free (5)\n"
        "  1. ε\n"
        "  2. (1)\n"
        "  3. (2)\n"
        "  4. (1, 2)\n"
        "  5. (2, 1)\n"
    )


def test_trace_csv_rendering(tiny_trace_set):
    assert render_traces(tiny_trace_set, "csv") == (
        "index,length,trace\n1,0,\n2,1,1\n3,1,2\n4,2,1 2\n5,2,2 1\n"
    )


def test_trace_jsonl_rendering(tiny_trace_set):
    lines = render_traces(tiny_trace_set, "jsonl").splitlines()
    rows = [json.loads(line) for line in lines]
    assert rows[0] == {"index": 1, "length": 0, "process": "free", "trace": []}
    assert rows[-1]["trace"] == [2, 1]


def test_count_rendering():
    assert render_count("fdap", 46, "table") == "46\n"
    assert render_count("fdap", 46, "csv") == "process,valid\nfdap,46\n"
    assert json.loads(render_count("fdap", 46, "jsonl")) == {"process": "fdap", "valid": 46}


def test_analysis_csv_reparses_to_the_same_numbers(full_analysis):
    text = render_analysis(full_analysis, "csv")
    blocks = text.split("\n\n")
    assert len(blocks) == 3

    utility_rows = list(csv.DictReader(io.StringIO(blocks[0])))
    assert len(utility_rows) == 12
    for row in utility_rows:
        record = next(
            r
            for r in full_analysis.records
            if r.stakeholder_name == row["stakeholder"] and r.process_name == row["process"]
        )
        assert int(row["valid"]) == record.valid_count
        assert int(row["favourable"]) == record.favourable_count
        assert float(row["utility"]) == round(record.utility, 6)

    cohort_rows = list(csv.DictReader(io.StringIO(blocks[2])))
    assert len(cohort_rows) == 7
    assert all(row["best"] == "fdap_m3" for row in cohort_rows)
    assert cohort_rows[0]["subset"] == "{S1}"


def test_analysis_jsonl_kinds(full_analysis):
    rows = [json.loads(line) for line in render_analysis(full_analysis, "jsonl").splitlines()]
    kinds = {row["kind"] for row in rows}
    assert kinds == {"utility", "collective", "cohort"}
    assert sum(1 for r in rows if r["kind"] == "utility") == 12
    assert sum(1 for r in rows if r["kind"] == "cohort") == 7


def test_analysis_table_contains_the_sections(full_analysis):
    text = render_analysis(full_analysis, "table")
    assert "stakeholder utilities" in text
    assert "collective distance from the ideal utilities" in text
    assert "h by stakeholder subset" in text
    assert "0.982869" in text


def test_rendering_is_deterministic(full_analysis):
    for fmt in ("table", "csv", "jsonl"):
        assert render_analysis(full_analysis, fmt) == render_analysis(full_analysis, fmt)


def test_analysis_without_cohorts_renders_one_section(models):
    pairs = [(m.process, list(m.stakeholders)) for m in models[:1]]
    result = run_analysis(pairs, include_cohorts=False)
    text = render_analysis(result, "csv")
    assert "\n\n" not in text
    assert text.startswith("stakeholder,process,valid,favourable,utility,rank\n")


def test_dot_export_shape_of_the_baseline():
    text = export_dot(fdap().process)
    node_lines = [line for line in text.splitlines() if "[label=" in line and "->" not in line]
    edge_lines = [line for line in text.splitlines() if "->" in line]
    assert len(node_lines) == 10
    assert len(edge_lines) == 12  # orresp contributes one edge per object
    assert sum(1 for line in edge_lines if "orresp(6,7)" in line) == 2
    assert text == export_dot(fdap().process)


def test_dot_export_audit_model_has_eleven_nodes():
    text = export_dot(fdap_m2().process)
    node_lines = [line for line in text.splitlines() if "[label=" in line and "->" not in line]
    assert len(node_lines) == 11


def test_dot_export_without_constraints_lists_nodes_only():
    text = export_dot(new_process("free", Alphabet.of_size(3)))
    assert "->" not in text
    assert text.count("[label=") == 3


def test_dot_export_marks_mustexist_nodes():
    process = new_process("need", Alphabet.of_size(2), {mustexist(2), prec(1, 2)})
    text = export_dot(process)
    assert '2 [label="2 [must occur]", peripheries=2];' in text
    assert '1 -> 2 [label="prec"];' in text


def test_figures_are_written(tmp_path, full_analysis):
    from declproc.figures import write_analysis_figures

    written = write_analysis_figures(full_analysis, tmp_path / "figs")
    assert [p.name for p in written] == ["utilities.png", "collective_h.png", "cohort_h.png"]
    for path in written:
        assert path.is_file() and path.stat().st_size > 0


def test_figures_without_cohorts(tmp_path, models):
    from declproc.figures import write_analysis_figures

    pairs = [(m.process, list(m.stakeholders)) for m in models[:2]]
    result = run_analysis(pairs, include_cohorts=False)
    written = write_analysis_figures(result, tmp_path)
    assert [p.name for p in written] == ["utilities.png"]
