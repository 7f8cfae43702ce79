from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Optional

from ..algebra import Event, SampleSpace, eval_prop, make_space
from ..coevent import Coevent, SchemeFilter, apply, classify, from_point, from_support, from_table, zero_coevent
from ..errors import KotiError
from ..second_order import lift, nagarjuna_census
from ..tetralemma import causation_tetralemma, census, corner, denial_census, deny_all
from . import nodes as n
from .lexer import DslError
from .printer import format_expr, format_statement


class ExecutionError(DslError):
    """A library error raised while running a statement, located at that statement."""

    def __init__(self, cause: KotiError, loc):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}", loc[0], loc[1])


@dataclass
class AssertResult:
    line: int
    column: int
    statement: str
    form: str
    passed: bool

    def as_dict(self):
        return {"line": self.line, "column": self.column, "statement": self.statement,
                "form": self.form, "passed": self.passed}


@dataclass
class QueryResult:
    line: int
    column: int
    statement: str
    kind: str
    result: dict

    def as_dict(self):
        return {"line": self.line, "column": self.column, "statement": self.statement,
                "kind": self.kind, "result": self.result}


@dataclass
class Report:
    space: Optional[SampleSpace] = None
    space_name: Optional[str] = None
    propositions: list[dict] = field(default_factory=list)
    assertions: list[AssertResult] = field(default_factory=list)
    queries: list[QueryResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.assertions)

    def as_dict(self) -> dict[str, Any]:
        return {
            "space": None if self.space is None else {
                "name": self.space_name, "outcomes": list(self.space.outcomes)},
            "propositions": self.propositions,
            "assertions": [a.as_dict() for a in self.assertions],
            "queries": [q.as_dict() for q in self.queries],
            "summary": {
                "assertions": len(self.assertions),
                "failed": sum(not a.passed for a in self.assertions),
                "queries": len(self.queries),
            },
        }


def describe_event(e: Event) -> dict:
    return {"members": list(e.members), "mask": e.mask}


class _Env(Mapping):
    """Atom bindings; props are expanded to their denotation only when referenced."""

    def __init__(self, interp):
        self.interp = interp

    def __getitem__(self, name):
        if name in self.interp.events:
            return self.interp.events[name]
        expr = self.interp.props[name]
        return eval_prop(expr, self, self.interp.space)

    def __iter__(self):
        yield from self.interp.events
        yield from self.interp.props

    def __len__(self):
        return len(self.interp.events) + len(self.interp.props)


class Interpreter:
    def __init__(self, jobs: int = 1):
        self.jobs = jobs
        self.space: Optional[SampleSpace] = None
        self.events: dict[str, Event] = {}
        self.props: dict = {}
        self.coevents: dict[str, Coevent] = {}
        self.env = _Env(self)
        self.report = Report()

    def run(self, script: n.Script) -> Report:
        for stmt in script.statements:
            try:
                self.step(stmt)
            except DslError:
                raise
            except KotiError as e:
                raise ExecutionError(e, stmt.loc) from e
        return self.report

    def ev(self, expr) -> Event:
        return eval_prop(expr, self.env, self.space)

    def step(self, s):
        if isinstance(s, n.SpaceDecl):
            self.space = make_space(s.outcomes)
            self.report.space = self.space
            self.report.space_name = s.name
        elif isinstance(s, n.EventDecl):
            self.events[s.name] = self.ev(s.expr)
        elif isinstance(s, n.PropDecl):
            self.props[s.name] = s.expr
            self.report.propositions.append({"name": s.name, "expr": format_expr(s.expr)})
        elif isinstance(s, n.CoeventDecl):
            self.coevents[s.name] = self.make_coevent(s)
        elif isinstance(s, n.ASSERTIONS):
            self.check(s)
        else:
            kind, result = self.query(s)
            self.report.queries.append(QueryResult(*s.loc, format_statement(s), kind, result))

    def make_coevent(self, s: n.CoeventDecl) -> Coevent:
        if s.kind == "point":
            return from_point(self.space, s.arg)
        if s.kind == "support":
            return from_support(self.space, s.arg)
        if s.kind == "table":
            return from_table(self.space, s.arg)
        return zero_coevent(self.space)

    def check(self, s):
        if isinstance(s, n.EventEq):
            passed, form = self.ev(s.left) == self.ev(s.right), "event_eq"
        else:
            want = 1 if isinstance(s, n.Affirm) else 0
            passed = apply(self.coevents[s.coevent], self.ev(s.expr)) == want
            form = "affirm" if want else "deny"
        self.report.assertions.append(AssertResult(*s.loc, format_statement(s), form, passed))

    def query(self, s) -> tuple[str, dict]:
        if isinstance(s, n.CornerQuery):
            phi, a = self.coevents[s.coevent], self.ev(s.expr)
            c = corner(phi, a)
            return "corner", {"event": describe_event(a), "corner": int(c), "reading": c.reading}
        if isinstance(s, n.CensusQuery):
            a = self.ev(s.expr)
            rep = census(self.space, a, SchemeFilter.parse(s.scheme or "all"), jobs=self.jobs)
            out = rep.as_dict()
            out["event"] = describe_event(a)
            return "census", out
        if isinstance(s, n.DenyAllQuery):
            cells = [self.ev(e) for e in s.cells]
            return "deny_all", {"cells": [describe_event(c) for c in cells],
                                "denies_all": deny_all(self.coevents[s.coevent], cells)}
        if isinstance(s, n.DenialCensusQuery):
            cells = [self.ev(e) for e in s.cells]
            scheme = s.scheme or "all"
            count = denial_census(self.space, cells, scheme, jobs=self.jobs)
            return "denial_census", {"cells": [describe_event(c) for c in cells],
                                     "scheme": scheme, "count": count}
        if isinstance(s, n.ClassifyQuery):
            phi = self.coevents[s.coevent]
            flags = classify(phi).as_dict()
            flags["schemes"] = [f.value for f in SchemeFilter if f.admits(classify(phi))]
            return "classify", flags
        if isinstance(s, n.NagarjunaQuery):
            a = self.ev(s.expr)
            so = lift(self.space, s.universe)
            count = nagarjuna_census(so, a, s.scheme2, jobs=self.jobs)
            return "nagarjuna", {"event": describe_event(a), "universe": s.universe,
                                 "scheme2": s.scheme2, "outcomes": so.as_space.n, "count": count}
        if isinstance(s, n.CausationQuery):
            space, cells = causation_tetralemma()
            counts = {f.value: denial_census(space, cells, f, jobs=self.jobs) for f in SchemeFilter}
            return "causation", {"space": list(space.outcomes),
                                 "cells": [describe_event(c) for c in cells],
                                 "denial_census": counts}
        raise TypeError(f"not a statement: {s!r}")


def execute(script: n.Script, jobs: int = 1) -> Report:
    return Interpreter(jobs=jobs).run(script)
