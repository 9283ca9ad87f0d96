from __future__ import annotations

from declproc.dsl import parse_process, parse_stakeholders, serialize_process
from declproc.library import (
    ACTIVITY_LABELS,
    all_models,
    audit_stakeholders,
    base_stakeholders,
    fdap,
    fdap_m1,
    fdap_m2,
    fdap_m3,
    fixture_dir,
)
from declproc.model import prec, resp, weakresp


def test_baseline_constraint_set_content():
    constraints = fdap().process.constraints
    assert weakresp(8, 9) in constraints
    assert prec(8, 9) not in constraints
    assert len(constraints) == 11
    assert fdap().process.alphabet.ids() == set(range(1, 11))


def test_m1_swaps_the_declaration_precedence():
    base = fdap().process.constraints
    m1 = fdap_m1().process.constraints
    assert m1 == base - {prec(1, 9)} | {prec(8, 9)}
    assert len(m1) == len(base)


def test_m2_extends_the_alphabet_and_constraints():
    base = fdap().process.constraints
    m2 = fdap_m2().process.constraints
    assert fdap_m2().process.alphabet.ids() == set(range(1, 12))
    assert {resp(4, 11), prec(11, 8), prec(1, 11)} <= m2
    assert base <= m2
    assert ACTIVITY_LABELS[11].startswith("Independent audit")


def test_m3_swaps_the_governor_precedence():
    base = fdap().process.constraints
    m3 = fdap_m3().process.constraints
    assert m3 == base - {prec(4, 5)} | {prec(1, 5)}
    assert len(m3) == len(base)


def test_stakeholder_bindings_per_model():
    names = [s.name for s in base_stakeholders()]
    assert names == ["S1", "S2", "S3"]
    assert fdap().stakeholders == fdap_m1().stakeholders == fdap_m3().stakeholders
    assert fdap_m2().stakeholders == audit_stakeholders()
    assert base_stakeholders()[0] == audit_stakeholders()[0]  # S1 is shared
    assert base_stakeholders()[1] != audit_stakeholders()[1]


def test_every_activity_is_labeled():
    for model in all_models():
        for activity in model.process.alphabet.activities:
            assert activity.label == ACTIVITY_LABELS[activity.id]


def test_fixture_files_agree_with_the_constructors():
    fixtures = fixture_dir()
    for model in all_models():
        text = (fixtures / f"{model.process.name}.dproc").read_text(encoding="utf-8")
        assert parse_process(text) == model.process

    base = parse_stakeholders((fixtures / "stakeholders.dstake").read_text(encoding="utf-8"))
    audit = parse_stakeholders(
        (fixtures / "stakeholders_audit.dstake").read_text(encoding="utf-8")
    )
    assert tuple(base) == base_stakeholders()
    assert tuple(audit) == audit_stakeholders()


def test_models_survive_a_serialization_round_trip():
    for model in all_models():
        assert parse_process(serialize_process(model.process)) == model.process
