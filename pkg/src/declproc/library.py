"""Bundled example models: a federal disaster assistance process and variants.

The baseline process has ten activities, from a disaster striking through to
federal support beginning, related by eleven temporal constraints. Three
variants probe policy changes:

  fdap_m1  the president may declare a disaster only after reviewing a formal
           assistance request (prec(1,9) becomes prec(8,9))
  fdap_m2  an independent audit (activity 11) is triggered by the officials'
           review and must precede the presidential review
  fdap_m3  the governor may act without waiting for the officials' review
           (prec(4,5) becomes prec(1,5))

Each model carries the three transparency stakeholders bound to the variant
of their predicate that matches the model's alphabet: with activity 11 in
play, the strong-governance stakeholder also demands the audit, and the
review-before-action stakeholder also accepts an audited path. The same
definitions ship as DSL files under fixtures/ so parsed and constructed
models can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .model import (
    Activity,
    Alphabet,
    DeclarativeProcess,
    mustexist,
    new_process,
    orresp,
    prec,
    resp,
    succ,
    weakresp,
)
from .preferences import Stakeholder, atom, contains

ACTIVITY_LABELS = {
    1: "A disaster strikes",
    2: "The state identifies the disaster",
    3: "A damage assessment is made",
    4: "Officials review the damage and determine its impact",
    5: "The governor assesses resources and the need for federal assistance",
    6: "State disaster response occurs",
    7: "A major disaster declaration request is submitted",
    8: "The president reviews the assistance request",
    9: "The president declares a disaster",
    10: "Federal disaster support begins",
    11: "Independent audit of damage impact and resources required is contracted",
}


@dataclass(frozen=True)
class NamedModel:
    """A bundled process together with the stakeholders bound to its alphabet."""

    process: DeclarativeProcess
    stakeholders: tuple[Stakeholder, ...]


def _alphabet(n: int) -> Alphabet:
    return Alphabet(tuple(Activity(i, ACTIVITY_LABELS[i]) for i in range(1, n + 1)))


_BASE_CONSTRAINTS = frozenset(
    {
        prec(1, 2),
        prec(1, 9),
        succ(2, 3),
        succ(3, 4),
        prec(4, 5),
        prec(5, 6),
        prec(5, 7),
        orresp(5, (6, 7)),
        succ(7, 8),
        weakresp(8, 9),
        succ(9, 10),
    }
)


def _s1() -> Stakeholder:
    # any review or assessment activity appeared; one consolidated form covers
    # both alphabets since contains(11) never fires without activity 11
    return Stakeholder("S1", contains(4) | contains(5) | contains(8) | contains(11))


def _s2(audit: bool) -> Stakeholder:
    expr = contains(4) & contains(5) & contains(8)
    if audit:
        expr = expr & contains(11)
    return Stakeholder("S2", expr)


def _s3(audit: bool) -> Stakeholder:
    expr = (atom(mustexist(6)) & (atom(prec(4, 6)) | atom(prec(5, 6)))) | (
        atom(mustexist(7)) & (atom(prec(4, 7)) | atom(prec(5, 7)))
    )
    if audit:
        expr = expr | (atom(mustexist(11)) & (atom(prec(4, 11)) | atom(prec(5, 11))))
    return Stakeholder("S3", expr)


def base_stakeholders() -> tuple[Stakeholder, ...]:
    """S1, S2, S3 as they apply to the ten-activity models."""
    return (_s1(), _s2(audit=False), _s3(audit=False))


def audit_stakeholders() -> tuple[Stakeholder, ...]:
    """S1, S2, S3 as they apply to the audit-extended model."""
    return (_s1(), _s2(audit=True), _s3(audit=True))


def fdap() -> NamedModel:
    """Baseline process: ten activities, eleven constraints, 46 valid traces."""
    return NamedModel(
        new_process("fdap", _alphabet(10), _BASE_CONSTRAINTS),
        base_stakeholders(),
    )


def fdap_m1() -> NamedModel:
    """No presidential discretion: prec(1,9) replaced by prec(8,9)."""
    constraints = _BASE_CONSTRAINTS - {prec(1, 9)} | {prec(8, 9)}
    return NamedModel(
        new_process("fdap_m1", _alphabet(10), constraints),
        base_stakeholders(),
    )


def fdap_m2() -> NamedModel:
    """Independent audit required: adds activity 11, resp(4,11) and prec(11,8).

    prec(1,11) anchors the audit to the disaster itself; without it the three
    orderings that contract the audit before any disaster strikes would count
    as valid executions, and the model would have 147 traces instead of 144.
    """
    constraints = _BASE_CONSTRAINTS | {resp(4, 11), prec(11, 8), prec(1, 11)}
    return NamedModel(
        new_process("fdap_m2", _alphabet(11), constraints),
        audit_stakeholders(),
    )


def fdap_m3() -> NamedModel:
    """Unilateral governor: prec(4,5) replaced by prec(1,5)."""
    constraints = _BASE_CONSTRAINTS - {prec(4, 5)} | {prec(1, 5)}
    return NamedModel(
        new_process("fdap_m3", _alphabet(10), constraints),
        base_stakeholders(),
    )


def all_models() -> tuple[NamedModel, ...]:
    """The four bundled models in their reporting order."""
    return (fdap(), fdap_m1(), fdap_m2(), fdap_m3())


def fixture_dir() -> Path:
    """Directory holding the bundled .dproc and .dstake files."""
    return Path(str(resources.files(__package__) / "fixtures"))
