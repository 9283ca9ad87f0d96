from __future__ import annotations

import itertools

import pytest

from declproc.model import (
    Alphabet,
    mustexist,
    orresp,
    prec,
    resp,
    succ,
    weakresp,
)
from declproc.semantics import SafetyStatus, safety_status, satisfies, satisfies_all

PV = SafetyStatus.PERMANENTLY_VIOLATED
NYV = SafetyStatus.NOT_YET_VIOLATED


def _all_shapes(ids):
    """Every sequence of distinct ids, all lengths including empty."""
    for k in range(len(ids) + 1):
        yield from itertools.permutations(ids, k)


def _constraint_battery(ids):
    """Every constraint instance over the given ids."""
    for a, b in itertools.permutations(ids, 2):
        yield prec(a, b)
        yield resp(a, b)
        yield succ(a, b)
        yield weakresp(a, b)
    for a in ids:
        yield mustexist(a)
        others = [x for x in ids if x != a]
        for size in range(1, len(others) + 1):
            for objects in itertools.combinations(others, size):
                yield orresp(a, objects)


def test_worked_example_satisfying_set():
    trace = (2, 1, 4)
    assert satisfies(trace, prec(2, 4))
    assert satisfies_all(trace, {prec(2, 4), resp(3, 2)})


def test_worked_example_failing_set():
    # 1 appears but 2 never occurs after it
    trace = (2, 1, 4)
    assert not satisfies(trace, resp(1, 2))
    assert not satisfies_all(trace, {resp(1, 2), succ(2, 4)})


def test_empty_constraint_set_is_vacuously_satisfied():
    assert satisfies_all((3, 1), set())


@pytest.mark.parametrize(
    "constraint, expected",
    [
        (prec(1, 2), True),
        (resp(1, 2), True),
        (succ(2, 3), True),
        (weakresp(8, 9), True),
        (orresp(5, (6, 7)), True),
        (mustexist(5), False),
    ],
)
def test_empty_trace_vacuity(constraint, expected):
    assert satisfies((), constraint) is expected


def test_weakresp_requires_order_only_when_both_occur():
    assert satisfies((1, 9, 10), weakresp(8, 9))  # 8 absent
    assert satisfies((8,), weakresp(8, 9))  # 9 absent
    assert satisfies((8, 1, 9), weakresp(8, 9))
    assert not satisfies((9, 1, 8), weakresp(8, 9))


def test_orresp_needs_a_responder_after_the_subject():
    assert not satisfies((1, 2, 3, 4, 5), orresp(5, (6, 7)))
    assert satisfies((5, 7), orresp(5, (6, 7)))
    assert not satisfies((7, 5), orresp(5, (6, 7)))


def test_succ_desugars_to_prec_and_resp_exhaustively():
    ids = (1, 2, 3)
    for trace in _all_shapes(ids):
        for a, b in itertools.permutations(ids, 2):
            assert satisfies(trace, succ(a, b)) == (
                satisfies(trace, prec(a, b)) and satisfies(trace, resp(a, b))
            )


def test_orresp_is_monotone_in_its_object_set():
    ids = (1, 2, 3)
    for trace in _all_shapes(ids):
        for small, large in (((2,), (2, 3)), ((3,), (2, 3))):
            if satisfies(trace, orresp(1, small)):
                assert satisfies(trace, orresp(1, large))


def test_safety_status_spec_cases():
    assert safety_status((2,), prec(1, 2), Alphabet.of_size(2)) is PV
    assert safety_status((1, 2), resp(2, 3), Alphabet.of_size(3)) is NYV
    assert safety_status((1, 9, 10, 2), weakresp(8, 9), Alphabet.of_size(10)) is NYV
    assert safety_status((9, 8), weakresp(8, 9), Alphabet.of_size(10)) is PV


def test_mustexist_is_never_dead_while_the_activity_is_unused():
    alphabet = Alphabet.of_size(3)
    assert safety_status((), mustexist(2), alphabet) is NYV
    assert safety_status((1, 3), mustexist(2), alphabet) is NYV


def test_constraints_on_unreachable_activities_go_dead():
    # alphabet lacks activity 5, so once 1 occurred nothing can respond
    alphabet = Alphabet.of_size(2)
    assert safety_status((1,), resp(1, 5), alphabet) is PV
    assert safety_status((), mustexist(5), alphabet) is PV
    assert safety_status((), resp(1, 5), alphabet) is NYV


def test_safety_status_matches_exhaustive_extension_oracle():
    """Permanence is exact: violated forever iff no extension satisfies."""
    ids = (1, 2, 3, 4)
    alphabet = Alphabet.of_size(4)
    battery = list(_constraint_battery(ids))
    for trace in _all_shapes(ids):
        unused = [a for a in ids if a not in trace]
        extensions = [
            trace + tail
            for k in range(len(unused) + 1)
            for tail in itertools.permutations(unused, k)
        ]
        for constraint in battery:
            reachable = any(satisfies(ext, constraint) for ext in extensions)
            status = safety_status(trace, constraint, alphabet)
            assert (status is PV) == (not reachable), (trace, str(constraint))
