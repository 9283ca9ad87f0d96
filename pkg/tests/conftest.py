from __future__ import annotations

import pytest

from declproc.analysis import run_analysis
from declproc.enumeration import enumerate_pruned
from declproc.library import all_models


@pytest.fixture(scope="session")
def models():
    return all_models()


@pytest.fixture(scope="session")
def trace_sets(models):
    """Valid traces of the four bundled models, enumerated once per session."""
    return {m.process.name: enumerate_pruned(m.process) for m in models}


@pytest.fixture(scope="session")
def full_analysis(models):
    pairs = [(m.process, list(m.stakeholders)) for m in models]
    return run_analysis(pairs, include_cohorts=True)
