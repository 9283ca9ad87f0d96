"""Figure rendering for analysis reports.

Writes PNG charts next to the delimited report: a grouped bar chart of the
utilities, and, when cohorts were computed, bar charts of the collective and
per-subset H values. matplotlib is imported lazily with the Agg backend so
report-only runs never pay for it.
"""

from __future__ import annotations

from pathlib import Path

from .analysis import AnalysisResult


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def write_analysis_figures(result: AnalysisResult, outdir: Path) -> list[Path]:
    """Render the analysis as figures under outdir; returns the written paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    written = [_utilities_figure(result, outdir / "utilities.png")]
    if result.cohorts is not None:
        written.append(_collective_figure(result, outdir / "collective_h.png"))
        written.append(_cohorts_figure(result, outdir / "cohort_h.png"))
    return written


def _utilities_figure(result: AnalysisResult, path: Path) -> Path:
    plt = _pyplot()
    utilities = {(r.stakeholder_name, r.process_name): r.utility for r in result.records}
    processes = result.process_names
    stakeholders = result.stakeholder_names

    fig, ax = plt.subplots(figsize=(1.8 + 1.6 * len(processes), 4.0))
    width = 0.8 / len(stakeholders)
    for j, s in enumerate(stakeholders):
        xs = [i + j * width for i in range(len(processes))]
        ax.bar(xs, [utilities[(s, p)] for p in processes], width, label=s)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(processes))])
    ax.set_xticklabels(processes)
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("utility")
    ax.set_title("stakeholder utility by process")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _collective_figure(result: AnalysisResult, path: Path) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(1.8 + 1.2 * len(result.collective), 3.6))
    names = [row.process_name for row in result.collective]
    ax.bar(range(len(names)), [row.h for row in result.collective], 0.6, color="C0")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names)
    ax.set_ylabel("H")
    ax.set_title("distance from the ideal utility vector")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _cohorts_figure(result: AnalysisResult, path: Path) -> Path:
    plt = _pyplot()
    assert result.cohorts is not None
    subsets = ["{" + ",".join(row.subset) + "}" for row in result.cohorts]
    processes = result.process_names

    fig, ax = plt.subplots(figsize=(2.0 + 1.1 * len(subsets), 4.2))
    width = 0.8 / len(processes)
    for j, p in enumerate(processes):
        xs = [i + j * width for i in range(len(subsets))]
        ax.bar(xs, [row.h_for(p) for row in result.cohorts], width, label=p)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(subsets))])
    ax.set_xticklabels(subsets, rotation=20, ha="right")
    ax.set_ylabel("H")
    ax.set_title("H by stakeholder subset")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
