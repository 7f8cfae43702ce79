"""Canonical text for scripts: one statement per line, minimal parentheses."""
from __future__ import annotations

from ..algebra import And, Atom, Not, One, Or, Outcomes, PropExpr, Zero
from . import nodes as n

_OR, _AND, _NOT = 1, 2, 3


def format_expr(expr: PropExpr, context: int = 0) -> str:
    if isinstance(expr, Or):
        text = f"{format_expr(expr.left, _OR)} | {format_expr(expr.right, _AND)}"
        return f"({text})" if context > _OR else text
    if isinstance(expr, And):
        text = f"{format_expr(expr.left, _AND)} & {format_expr(expr.right, _NOT)}"
        return f"({text})" if context > _AND else text
    if isinstance(expr, Not):
        return "!" + format_expr(expr.child, _NOT)
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Outcomes):
        return "{" + ", ".join(expr.names) + "}"
    if isinstance(expr, Zero):
        return "0"
    if isinstance(expr, One):
        return "1"
    raise TypeError(f"not an expression: {expr!r}")


def _exprs(items) -> str:
    return ", ".join(format_expr(e) for e in items)


def _scheme(s) -> str:
    return f" scheme {s}" if s else ""


def format_statement(s: n.Statement) -> str:
    if isinstance(s, n.SpaceDecl):
        body = f"space {s.name} = {{{', '.join(s.outcomes)}}}"
    elif isinstance(s, n.EventDecl):
        body = f"event {s.name} = {format_expr(s.expr)}"
    elif isinstance(s, n.PropDecl):
        body = f"prop {s.name} = {format_expr(s.expr)}"
    elif isinstance(s, n.CoeventDecl):
        if s.kind == "point":
            rhs = f"point {s.arg}"
        elif s.kind == "support":
            rhs = "support {" + ", ".join(s.arg) + "}"
        elif s.kind == "table":
            rhs = f'table "{s.arg}"'
        else:
            rhs = "zero"
        body = f"coevent {s.name} = {rhs}"
    elif isinstance(s, n.Affirm):
        body = f"assert {s.coevent}({format_expr(s.expr)}) == 1"
    elif isinstance(s, n.Deny):
        body = f"assert {s.coevent}({format_expr(s.expr)}) == 0"
    elif isinstance(s, n.EventEq):
        body = f"assert {format_expr(s.left)} == {format_expr(s.right)}"
    elif isinstance(s, n.CornerQuery):
        body = f"query corner({s.coevent}, {format_expr(s.expr)})"
    elif isinstance(s, n.CensusQuery):
        body = f"query census({format_expr(s.expr)}){_scheme(s.scheme)}"
    elif isinstance(s, n.DenyAllQuery):
        body = f"query deny_all({s.coevent}, {_exprs(s.cells)})"
    elif isinstance(s, n.DenialCensusQuery):
        body = f"query denial_census({_exprs(s.cells)}){_scheme(s.scheme)}"
    elif isinstance(s, n.ClassifyQuery):
        body = f"query classify({s.coevent})"
    elif isinstance(s, n.NagarjunaQuery):
        body = f"query nagarjuna({format_expr(s.expr)}) universe {s.universe} scheme2 {s.scheme2}"
    elif isinstance(s, n.CausationQuery):
        body = "query causation"
    else:
        raise TypeError(f"not a statement: {s!r}")
    return body + ";"


def format_script(script: n.Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)
