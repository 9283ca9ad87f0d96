"""Text formats for processes (.dproc) and stakeholders (.dstake).

Process files are line oriented. Blank lines and lines starting with # are
ignored. The grammar, one construct per line:

    process <name>                      header, exactly once, first
    activities <n>                      alphabet of unlabeled activities 1..n
    activity <id> [<label text>]        one activity; may repeat; the label
                                        runs to the end of the line
    prec|resp|succ|weakresp <a> <b>     binary constraint
    orresp <a> <b1> [<b2> ...]          subject then one or more objects
    mustexist <a>                       existence constraint

Use either one "activities" line or "activity" lines, not both, and declare
the alphabet before any constraint. Constraints may only reference declared
activities.

Stakeholder files hold named boolean expressions:

    <name> := <expr>
    expr   := term ("or" term)*
    term   := factor ("and" factor)*
    factor := "not" factor | "(" expr ")" | atom
    atom   := contains(a) | mustexist(a)
            | prec(a,b) | resp(a,b) | succ(a,b) | weakresp(a,b)
            | orresp(a; b1,b2,...)

contains(a) and mustexist(a) are the same atom. Definitions may span lines;
# starts a comment anywhere. Both parsers report errors with line and column,
and parse(serialize(x)) returns a structurally equal value for every x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    Activity,
    Alphabet,
    Constraint,
    ConstraintKind,
    DeclarativeProcess,
    ModelError,
    new_process,
)
from .preferences import (
    AndExpr,
    AtomExpr,
    NotExpr,
    OrExpr,
    PreferenceExpr,
    Stakeholder,
)

_CONSTRAINT_KINDS = {kind.value: kind for kind in ConstraintKind}
_BINARY_NAMES = ("prec", "resp", "succ", "weakresp")
_RESERVED = frozenset({"and", "or", "not", "contains"}) | frozenset(_CONSTRAINT_KINDS)


class ParseError(Exception):
    """Malformed DSL input, with a 1-based source location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# process files


def parse_process(text: str) -> DeclarativeProcess:
    """Parse a .dproc document into a validated process."""
    name: str | None = None
    count_form: int | None = None
    listed: list[Activity] = []
    constraints: list[Constraint] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        word, col = tokens[0]

        if word == "process":
            if name is not None:
                raise ParseError("duplicate process header", line_no, col)
            if len(tokens) != 2:
                raise ParseError("expected exactly one process name", line_no, col)
            name = tokens[1][0]
            continue
        if name is None:
            raise ParseError("expected 'process <name>' header first", line_no, col)

        if word == "activities":
            if constraints:
                raise ParseError("alphabet must be declared before constraints", line_no, col)
            if count_form is not None or listed:
                raise ParseError("alphabet already declared", line_no, col)
            if len(tokens) != 2:
                raise ParseError("expected a single activity count", line_no, col)
            count_form = _parse_id(tokens[1], line_no)
            continue

        if word == "activity":
            if constraints:
                raise ParseError("alphabet must be declared before constraints", line_no, col)
            if count_form is not None:
                raise ParseError("cannot mix 'activities <n>' with 'activity' lines", line_no, col)
            if len(tokens) < 2:
                raise ParseError("expected an activity id", line_no, col)
            activity_id = _parse_id(tokens[1], line_no)
            label_start = tokens[1][1] + len(tokens[1][0]) - 1
            label = line[label_start:].strip() or None
            try:
                listed.append(Activity(activity_id, label))
            except ModelError as exc:
                raise ParseError(str(exc), line_no, col) from exc
            continue

        if word in _CONSTRAINT_KINDS:
            if count_form is None and not listed:
                raise ParseError("alphabet must be declared before constraints", line_no, col)
            declared = (
                set(range(1, count_form + 1)) if count_form is not None else {a.id for a in listed}
            )
            constraints.append(_parse_constraint(word, tokens, line_no, declared))
            continue

        raise ParseError(f"unknown constraint kind or directive '{word}'", line_no, col)

    if name is None:
        raise ParseError("empty document: expected 'process <name>' header", 1, 1)
    if count_form is None and not listed:
        raise ParseError("missing alphabet declaration ('activities <n>' or 'activity' lines)", 1, 1)

    alphabet = Alphabet.of_size(count_form) if count_form is not None else Alphabet(tuple(listed))
    try:
        return new_process(name, alphabet, constraints)
    except ModelError as exc:  # per-line checks should have caught everything
        raise ParseError(str(exc), 1, 1) from exc


def _parse_id(token: tuple[str, int], line_no: int) -> int:
    text, col = token
    if not text.isdigit():
        raise ParseError(f"expected a non-negative integer, got '{text}'", line_no, col)
    return int(text)


def _parse_constraint(
    word: str, tokens: list[tuple[str, int]], line_no: int, declared: set[int]
) -> Constraint:
    kind = _CONSTRAINT_KINDS[word]
    args = tokens[1:]
    if word in _BINARY_NAMES and len(args) != 2:
        where = args[2] if len(args) > 2 else tokens[0]
        raise ParseError(f"{word} takes exactly two activities", line_no, where[1])
    if word == "mustexist" and len(args) != 1:
        where = args[1] if len(args) > 1 else tokens[0]
        raise ParseError("mustexist takes exactly one activity", line_no, where[1])
    if word == "orresp" and len(args) < 2:
        raise ParseError("orresp takes a subject and at least one object", line_no, tokens[0][1])

    ids = []
    for token in args:
        value = _parse_id(token, line_no)
        if value not in declared:
            raise ParseError(f"undeclared activity {value}", line_no, token[1])
        ids.append(value)
    try:
        return Constraint(kind, ids[0], tuple(ids[1:]))
    except ModelError as exc:
        raise ParseError(str(exc), line_no, tokens[0][1]) from exc


def serialize_process(process: DeclarativeProcess) -> str:
    """Render a process as a .dproc document; parsing it back gives an equal process."""
    lines = [f"process {process.name}"]
    acts = process.alphabet.activities
    plain_run = all(a.label is None for a in acts) and [a.id for a in acts] == list(
        range(1, len(acts) + 1)
    )
    if plain_run:
        lines.append(f"activities {len(acts)}")
    else:
        for act in acts:
            lines.append(f"activity {act.id} {act.label}" if act.label else f"activity {act.id}")
    for c in process.sorted_constraints():
        lines.append(" ".join([c.kind.value, str(c.subject), *(str(o) for o in c.objects)]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# stakeholder files


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | int | op | end
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"[ \t\r]+|#[^\n]*|\n|(?P<ident>[A-Za-z_]\w*)|(?P<int>\d+)|(?P<op>:=|[(),;])")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        if m.group() == "\n":
            line += 1
            line_start = m.end()
        elif m.lastgroup is not None:
            tokens.append(_Token(m.lastgroup, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(_Token("end", "", line, len(text) - line_start + 1))
    return tokens


class _StakeholderParser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def fail(self, message: str, token: _Token | None = None) -> ParseError:
        token = token or self.peek()
        shown = f"'{token.text}'" if token.kind != "end" else "end of input"
        return ParseError(f"{message}, got {shown}", token.line, token.column)

    def expect_op(self, op: str, context: str) -> _Token:
        token = self.peek()
        if token.kind != "op" or token.text != op:
            raise self.fail(f"expected '{op}' {context}")
        return self.advance()

    def parse_file(self) -> list[Stakeholder]:
        stakeholders: list[Stakeholder] = []
        seen: set[str] = set()
        while self.peek().kind != "end":
            name_token = self.peek()
            if name_token.kind != "ident":
                raise self.fail("expected a stakeholder name")
            if name_token.text in _RESERVED:
                raise self.fail(f"'{name_token.text}' is a reserved word")
            if name_token.text in seen:
                raise self.fail(f"duplicate stakeholder name '{name_token.text}'")
            self.advance()
            self.expect_op(":=", "after the stakeholder name")
            expr = self.parse_expr()
            stakeholders.append(Stakeholder(name_token.text, expr))
            seen.add(name_token.text)
        if not stakeholders:
            raise ParseError("empty document: expected at least one definition", 1, 1)
        return stakeholders

    def parse_expr(self) -> PreferenceExpr:
        # a chain parses n-ary; explicit parentheses keep their own node
        children = [self.parse_term()]
        while self.peek().kind == "ident" and self.peek().text == "or":
            self.advance()
            children.append(self.parse_term())
        return OrExpr(tuple(children)) if len(children) > 1 else children[0]

    def parse_term(self) -> PreferenceExpr:
        children = [self.parse_factor()]
        while self.peek().kind == "ident" and self.peek().text == "and":
            self.advance()
            children.append(self.parse_factor())
        return AndExpr(tuple(children)) if len(children) > 1 else children[0]

    def parse_factor(self) -> PreferenceExpr:
        token = self.peek()
        if token.kind == "ident" and token.text == "not":
            self.advance()
            return NotExpr(self.parse_factor())
        if token.kind == "op" and token.text == "(":
            self.advance()
            expr = self.parse_expr()
            self.expect_op(")", "to close the group")
            return expr
        if token.kind == "ident" and token.text not in ("and", "or"):
            return self.parse_atom()
        raise self.fail("expected an atom, 'not', or '('")

    def parse_atom(self) -> AtomExpr:
        name_token = self.advance()
        name = name_token.text
        if name not in _CONSTRAINT_KINDS and name != "contains":
            raise self.fail(f"unknown atom '{name}'", name_token)
        self.expect_op("(", f"after '{name}'")
        first = self.parse_int()
        if name in ("contains", "mustexist"):
            self.expect_op(")", "to close the atom")
            return AtomExpr(Constraint(ConstraintKind.MUSTEXIST, first))
        if name == "orresp":
            self.expect_op(";", "between the subject and the objects")
            objects = [self.parse_int()]
            while self.peek().kind == "op" and self.peek().text == ",":
                self.advance()
                objects.append(self.parse_int())
            self.expect_op(")", "to close the atom")
            return self.build_atom(ConstraintKind.ORRESP, first, tuple(objects), name_token)
        self.expect_op(",", "between the two activities")
        second = self.parse_int()
        self.expect_op(")", "to close the atom")
        return self.build_atom(_CONSTRAINT_KINDS[name], first, (second,), name_token)

    def build_atom(
        self, kind: ConstraintKind, subject: int, objects: tuple[int, ...], at: _Token
    ) -> AtomExpr:
        try:
            return AtomExpr(Constraint(kind, subject, objects))
        except ModelError as exc:
            raise ParseError(str(exc), at.line, at.column) from exc

    def parse_int(self) -> int:
        token = self.peek()
        if token.kind != "int":
            raise self.fail("expected an activity id")
        self.advance()
        return int(token.text)


def parse_stakeholders(text: str) -> list[Stakeholder]:
    """Parse a .dstake document into named preference expressions."""
    return _StakeholderParser(_tokenize(text)).parse_file()


def serialize_stakeholders(stakeholders: list[Stakeholder]) -> str:
    """Render stakeholders one definition per line; parses back structurally equal."""
    return "".join(f"{s.name} := {_expr_text(s.expr)}\n" for s in stakeholders)


def _expr_text(node: PreferenceExpr) -> str:
    if isinstance(node, OrExpr):
        return " or ".join(_term_text(child) for child in node.children)
    return _term_text(node)


def _term_text(node: PreferenceExpr) -> str:
    if isinstance(node, AndExpr):
        return " and ".join(_factor_text(child) for child in node.children)
    return _factor_text(node)


def _factor_text(node: PreferenceExpr) -> str:
    if isinstance(node, NotExpr):
        return "not " + _factor_text(node.child)
    if isinstance(node, AtomExpr):
        return _atom_text(node.constraint)
    return "(" + _expr_text(node) + ")"


def _atom_text(c: Constraint) -> str:
    if c.kind is ConstraintKind.MUSTEXIST:
        return f"contains({c.subject})"
    if c.kind is ConstraintKind.ORRESP:
        return f"orresp({c.subject}; {','.join(str(o) for o in c.objects)})"
    return f"{c.kind.value}({c.subject},{c.objects[0]})"
