"""Declarative process models: trace enumeration, stakeholder preferences, utility ranking."""

from .analysis import AnalysisResult, CollectiveRow, run_analysis
from .dot import export_dot
from .dsl import (
    ParseError,
    parse_process,
    parse_stakeholders,
    serialize_process,
    serialize_stakeholders,
)
from .enumeration import (
    DEFAULT_BRUTEFORCE_CAP,
    EnumerationCapExceeded,
    TraceSet,
    count_valid,
    enumerate_bruteforce,
    enumerate_pruned,
)
from .model import (
    Activity,
    Alphabet,
    Constraint,
    ConstraintKind,
    DeclarativeProcess,
    ModelError,
    Trace,
    mustexist,
    new_process,
    orresp,
    prec,
    resp,
    succ,
    validate_trace_shape,
    weakresp,
)
from .preferences import (
    AndExpr,
    AtomExpr,
    NotExpr,
    OrExpr,
    PreferenceExpr,
    Stakeholder,
    atom,
    contains,
    count_favourable,
    evaluate,
    judge,
)
from .semantics import SafetyStatus, safety_status, satisfies, satisfies_all
from .utility import (
    CohortRow,
    UtilityDomainError,
    RankedRecord,
    UtilityRecord,
    cohort_analysis,
    favourable_count_for,
    h_distance,
    implied_exponent,
    rank_processes,
    utility,
)

__version__ = "0.1.0"

__all__ = [
    "Activity",
    "Alphabet",
    "AnalysisResult",
    "AndExpr",
    "AtomExpr",
    "CohortRow",
    "CollectiveRow",
    "Constraint",
    "ConstraintKind",
    "DEFAULT_BRUTEFORCE_CAP",
    "DeclarativeProcess",
    "EnumerationCapExceeded",
    "ModelError",
    "NotExpr",
    "OrExpr",
    "ParseError",
    "PreferenceExpr",
    "RankedRecord",
    "SafetyStatus",
    "Stakeholder",
    "Trace",
    "TraceSet",
    "UtilityDomainError",
    "UtilityRecord",
    "atom",
    "cohort_analysis",
    "contains",
    "count_favourable",
    "count_valid",
    "enumerate_bruteforce",
    "enumerate_pruned",
    "evaluate",
    "export_dot",
    "favourable_count_for",
    "h_distance",
    "implied_exponent",
    "judge",
    "mustexist",
    "new_process",
    "orresp",
    "parse_process",
    "parse_stakeholders",
    "prec",
    "rank_processes",
    "resp",
    "run_analysis",
    "safety_status",
    "satisfies",
    "satisfies_all",
    "serialize_process",
    "serialize_stakeholders",
    "succ",
    "utility",
    "validate_trace_shape",
    "weakresp",
]
