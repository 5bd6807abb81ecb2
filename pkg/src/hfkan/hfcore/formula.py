"""Bounded first-order formulas over HF sets.

Quantifiers always carry a bounding term, so only bounded (Delta-0 style)
conditions are representable.  Evaluation is call-by-value Tarskian truth;
`separation` filters a set by a formula with one distinguished variable.

Text syntax (used by the CLI):

    formula := imp ('<->' imp)?
    imp     := or ('->' imp)?
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | 'true' | 'false' | quant | '(' formula ')' | atom
    quant   := ('all' | 'any') NAME 'in' term '(' formula ')'
    atom    := term ('in' | '=') term
    term    := NAME | hf-literal
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, UnboundVariableError
from .sets import HFSet, hf, hf_literal, _parse_hf_at, _skip_ws

__all__ = [
    "Var",
    "Const",
    "Member",
    "Eq",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "ForallIn",
    "ExistsIn",
    "TRUE",
    "FALSE",
    "eval_bounded",
    "separation",
    "free_variables",
    "parse_formula",
    "formula_text",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: HFSet


@dataclass(frozen=True)
class Member:
    item: object
    collection: object


@dataclass(frozen=True)
class Eq:
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    premise: object
    conclusion: object


@dataclass(frozen=True)
class Iff:
    left: object
    right: object


@dataclass(frozen=True)
class ForallIn:
    var: str
    bound: object
    body: object


@dataclass(frozen=True)
class ExistsIn:
    var: str
    bound: object
    body: object


TRUE = And(())
FALSE = Or(())


def _term_value(t, env) -> HFSet:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariableError(t.name) from None
    if isinstance(t, Const):
        return t.value
    raise TypeError(f"not a term: {t!r}")


def eval_bounded(phi, env) -> bool:
    """Truth of phi in the given environment (a name -> HFSet map)."""
    match phi:
        case Member(item=i, collection=c):
            return _term_value(i, env) in _term_value(c, env)
        case Eq(left=a, right=b):
            return _term_value(a, env) is _term_value(b, env)
        case Not(body=b):
            return not eval_bounded(b, env)
        case And(parts=ps):
            return all(eval_bounded(p, env) for p in ps)
        case Or(parts=ps):
            return any(eval_bounded(p, env) for p in ps)
        case Implies(premise=p, conclusion=q):
            return (not eval_bounded(p, env)) or eval_bounded(q, env)
        case Iff(left=a, right=b):
            return eval_bounded(a, env) == eval_bounded(b, env)
        case ForallIn(var=v, bound=t, body=b):
            bound = _term_value(t, env)
            return all(eval_bounded(b, {**env, v: x}) for x in bound)
        case ExistsIn(var=v, bound=t, body=b):
            bound = _term_value(t, env)
            return any(eval_bounded(b, {**env, v: x}) for x in bound)
    raise TypeError(f"not a formula: {phi!r}")


def separation(s: HFSet, var: str, phi, env=None) -> HFSet:
    """The canonical subset {x in s | phi(x)}; env closes phi except var."""
    env = dict(env or {})
    return hf(x for x in s if eval_bounded(phi, {**env, var: x}))


def free_variables(phi) -> set[str]:
    match phi:
        case Var(name=n):
            return {n}
        case Const():
            return set()
        case Member(item=i, collection=c) | Eq(left=i, right=c):
            return free_variables(i) | free_variables(c)
        case Not(body=b):
            return free_variables(b)
        case And(parts=ps) | Or(parts=ps):
            out: set[str] = set()
            for p in ps:
                out |= free_variables(p)
            return out
        case Implies(premise=p, conclusion=q) | Iff(left=p, right=q):
            return free_variables(p) | free_variables(q)
        case ForallIn(var=v, bound=t, body=b) | ExistsIn(var=v, bound=t, body=b):
            return free_variables(t) | (free_variables(b) - {v})
    raise TypeError(f"not a formula: {phi!r}")


# --- text form ---------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_KEYWORDS = {"all", "any", "in", "true", "false"}


def formula_text(phi) -> str:
    match phi:
        case And(parts=()):
            return "true"
        case Or(parts=()):
            return "false"
        case Member(item=i, collection=c):
            return f"{_term_text(i)} in {_term_text(c)}"
        case Eq(left=a, right=b):
            return f"{_term_text(a)} = {_term_text(b)}"
        case Not(body=b):
            return f"~({formula_text(b)})"
        case And(parts=ps):
            return "(" + " & ".join(formula_text(p) for p in ps) + ")"
        case Or(parts=ps):
            return "(" + " | ".join(formula_text(p) for p in ps) + ")"
        case Implies(premise=p, conclusion=q):
            return f"({formula_text(p)} -> {formula_text(q)})"
        case Iff(left=a, right=b):
            return f"({formula_text(a)} <-> {formula_text(b)})"
        case ForallIn(var=v, bound=t, body=b):
            return f"all {v} in {_term_text(t)} ({formula_text(b)})"
        case ExistsIn(var=v, bound=t, body=b):
            return f"any {v} in {_term_text(t)} ({formula_text(b)})"
    raise TypeError(f"not a formula: {phi!r}")


def _term_text(t) -> str:
    if isinstance(t, Var):
        return t.name
    return hf_literal(t.value)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ParseError(message, col=self.pos + 1)

    def ws(self):
        self.pos = _skip_ws(self.text, self.pos)

    def peek(self, token):
        self.ws()
        return self.text.startswith(token, self.pos)

    def take(self, token):
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def take_name(self):
        self.ws()
        m = _NAME.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def formula(self):
        left = self.imp()
        if self.take("<->"):
            return Iff(left, self.imp())
        return left

    def imp(self):
        left = self.disj()
        if self.take("->"):
            return Implies(left, self.imp())
        return left

    def disj(self):
        parts = [self.conj()]
        while self.peek("|") and not self.peek("->"):
            self.take("|")
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.unary()]
        while self.take("&"):
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self):
        self.ws()
        if self.take("~"):
            return Not(self.unary())
        mark = self.pos
        name = self.take_name()
        if name in ("all", "any"):
            var = self.take_name()
            if var is None or var in _KEYWORDS:
                self.error("expected a variable name after quantifier")
            if self.take_name() != "in":
                self.error("expected 'in' after quantified variable")
            bound = self.term()
            if not self.take("("):
                self.error("expected '(' around quantifier body")
            body = self.formula()
            if not self.take(")"):
                self.error("expected ')' closing quantifier body")
            cls = ForallIn if name == "all" else ExistsIn
            return cls(var, bound, body)
        if name == "true":
            return TRUE
        if name == "false":
            return FALSE
        self.pos = mark
        if self.peek("(") and not self._looks_like_atom():
            self.take("(")
            inner = self.formula()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        return self.atom()

    def _looks_like_atom(self):
        # '(' never starts an HF literal, so a parenthesis always groups.
        return False

    def atom(self):
        left = self.term()
        self.ws()
        if self.take("="):
            return Eq(left, self.term())
        if self.take_name() == "in":
            return Member(left, self.term())
        self.error("expected 'in' or '=' in atomic formula")

    def term(self):
        self.ws()
        if self.pos < len(self.text) and self.text[self.pos] in "{#<":
            value, self.pos = _parse_hf_at(self.text, self.pos)
            return Const(value)
        name = self.take_name()
        if name is None or name in _KEYWORDS:
            self.error("expected a term")
        return Var(name)


def parse_formula(text: str):
    p = _Parser(text)
    out = p.formula()
    p.ws()
    if p.pos != len(text):
        p.error(f"trailing input after formula: {text[p.pos:]!r}")
    return out
