"""Recursive-descent parser with name resolution.

Operator precedence is ``!`` > ``&`` > ``|``; binary operators associate to
the left. Words are not reserved: statement and query keywords are matched by
position, so an outcome may be called ``all`` or ``zero``.
"""
from __future__ import annotations

from ..algebra import And, Atom, Not, One, Or, Outcomes, PropExpr, Zero
from . import nodes as n
from .lexer import DuplicateName, ParseError, Token, UseBeforeDecl, tokenize

SCHEMES = ("all", "multiplicative", "homomorphic")
STATEMENT_KEYWORDS = ("space", "event", "prop", "coevent", "assert", "query")
QUERY_KEYWORDS = ("corner", "census", "deny_all", "denial_census", "classify", "nagarjuna", "causation")
COEVENT_FORMS = ("point", "support", "table", "zero")


def parse(text: str) -> n.Script:
    return _Parser(tokenize(text)).script()


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.names: dict[str, str] = {}
        self.outcomes: tuple[str, ...] | None = None

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.pos += 1
        return t

    def fail(self, expected, message=None, tok=None):
        tok = tok or self.tok
        raise ParseError(message or f"unexpected {tok.describe()}", tok.line, tok.column, tok.text or None, expected)

    def expect(self, kind, describe=None) -> Token:
        if self.tok.kind != kind:
            self.fail([describe or repr(kind)])
        return self.advance()

    def word(self, *choices) -> Token:
        if self.tok.kind != "IDENT" or self.tok.text not in choices:
            self.fail([repr(c) for c in choices])
        return self.advance()

    def at_word(self, text) -> bool:
        return self.tok.kind == "IDENT" and self.tok.text == text

    # names

    def declare(self, tok: Token, kind: str) -> None:
        if tok.text in self.names:
            raise DuplicateName(f"{tok.text!r} is already declared as a {self.names[tok.text]}", tok.line, tok.column, tok.text)
        self.names[tok.text] = kind

    def need_space(self, tok: Token) -> None:
        if self.outcomes is None:
            raise UseBeforeDecl("no space declared yet", tok.line, tok.column, tok.text)

    def resolve(self, tok: Token, *kinds) -> None:
        kind = self.names.get(tok.text)
        if kind is None:
            raise UseBeforeDecl(f"{tok.text!r} is not declared", tok.line, tok.column, tok.text)
        if kind not in kinds:
            self.fail([" or ".join(kinds)], f"{tok.text!r} is a {kind}", tok)

    def outcome(self) -> str:
        tok = self.expect("IDENT", "outcome name")
        if tok.text not in self.outcomes:
            raise UseBeforeDecl(f"{tok.text!r} is not an outcome of the space", tok.line, tok.column, tok.text)
        return tok.text

    def outcome_set(self, allow_empty: bool) -> tuple[str, ...]:
        self.expect("{")
        names = []
        if self.tok.kind == "}" and allow_empty:
            self.advance()
            return ()
        names.append(self.outcome())
        while self.tok.kind == ",":
            self.advance()
            names.append(self.outcome())
        self.expect("}", "',' or '}'")
        return tuple(names)

    # grammar

    def script(self) -> n.Script:
        statements = []
        while self.tok.kind != "EOF":
            statements.append(self.statement())
        return n.Script(tuple(statements))

    def statement(self) -> n.Statement:
        tok = self.tok
        if tok.kind != "IDENT" or tok.text not in STATEMENT_KEYWORDS:
            self.fail(["statement keyword"], f"expected a statement, got {tok.describe()}")
        method = getattr(self, "stmt_" + tok.text)
        self.advance()
        stmt = method((tok.line, tok.column), tok)
        self.expect(";", "';'")
        return stmt

    def stmt_space(self, loc, kw):
        if self.outcomes is not None:
            raise DuplicateName("only one space per script", kw.line, kw.column, kw.text)
        name = self.expect("IDENT", "space name")
        self.declare(name, "space")
        self.expect("=", "'='")
        self.expect("{", "'{'")
        names = [self.expect("IDENT", "outcome name")]
        while self.tok.kind == ",":
            self.advance()
            names.append(self.expect("IDENT", "outcome name"))
        self.expect("}", "',' or '}'")
        seen = set()
        for t in names:
            if t.text in seen:
                raise DuplicateName(f"duplicate outcome {t.text!r}", t.line, t.column, t.text)
            seen.add(t.text)
        self.outcomes = tuple(t.text for t in names)
        return n.SpaceDecl(name.text, self.outcomes, loc)

    def _named_expr(self, kw, kind):
        self.need_space(kw)
        name = self.expect("IDENT", f"{kind} name")
        self.expect("=", "'='")
        expr = self.expr()
        self.declare(name, kind)
        return name.text, expr

    def stmt_event(self, loc, kw):
        return n.EventDecl(*self._named_expr(kw, "event"), loc=loc)

    def stmt_prop(self, loc, kw):
        return n.PropDecl(*self._named_expr(kw, "prop"), loc=loc)

    def stmt_coevent(self, loc, kw):
        self.need_space(kw)
        name = self.expect("IDENT", "coevent name")
        self.expect("=", "'='")
        form = self.word(*COEVENT_FORMS).text
        if form == "point":
            arg = self.outcome()
        elif form == "support":
            arg = self.outcome_set(allow_empty=False)
        elif form == "table":
            tok = self.expect("STRING", "quoted bit string")
            arg = tok.text[1:-1]
            need = 1 << len(self.outcomes)
            if len(arg) != need or set(arg) - {"0", "1"}:
                self.fail([f"{need} bits of 0/1"], "bad table", tok)
        else:
            arg = None
        self.declare(name, "coevent")
        return n.CoeventDecl(name.text, form, arg, loc)

    def stmt_assert(self, loc, kw):
        self.need_space(kw)
        if self.tok.kind == "IDENT" and self.peek().kind == "(":
            phi = self.coevent_ref()
            self.expect("(")
            expr = self.expr()
            self.expect(")", "')'")
            self.expect("==", "'=='")
            bit = self.bit()
            return (n.Affirm if bit else n.Deny)(phi, expr, loc)
        left = self.expr()
        self.expect("==", "'=='")
        right = self.expr()
        return n.EventEq(left, right, loc)

    def bit(self) -> int:
        tok = self.tok
        if tok.kind != "NUMBER" or tok.text not in ("0", "1"):
            self.fail(["'0'", "'1'"])
        self.advance()
        return int(tok.text)

    def scheme(self) -> str:
        return self.word(*SCHEMES).text

    def coevent_ref(self) -> str:
        tok = self.expect("IDENT", "coevent name")
        self.resolve(tok, "coevent")
        return tok.text

    def expr_list(self) -> tuple[PropExpr, ...]:
        items = [self.expr()]
        while self.tok.kind == ",":
            self.advance()
            items.append(self.expr())
        return tuple(items)

    def stmt_query(self, loc, kw):
        which = self.word(*QUERY_KEYWORDS).text
        if which == "causation":
            return n.CausationQuery(loc)
        self.need_space(kw)
        self.expect("(", "'('")
        if which == "corner":
            phi = self.coevent_ref()
            self.expect(",", "','")
            expr = self.expr()
            self.expect(")", "')'")
            return n.CornerQuery(phi, expr, loc)
        if which == "classify":
            phi = self.coevent_ref()
            self.expect(")", "')'")
            return n.ClassifyQuery(phi, loc)
        if which == "deny_all":
            phi = self.coevent_ref()
            self.expect(",", "','")
            cells = self.expr_list()
            self.expect(")", "',' or ')'")
            return n.DenyAllQuery(phi, cells, loc)
        if which == "denial_census":
            cells = self.expr_list()
            self.expect(")", "',' or ')'")
            return n.DenialCensusQuery(cells, self.optional_scheme(), loc)
        expr = self.expr()
        self.expect(")", "')'")
        if which == "census":
            return n.CensusQuery(expr, self.optional_scheme(), loc)
        self.word("universe")
        universe = self.scheme()
        self.word("scheme2")
        return n.NagarjunaQuery(expr, universe, self.scheme(), loc)

    def optional_scheme(self):
        if self.at_word("scheme"):
            self.advance()
            return self.scheme()
        if self.tok.kind != ";":
            self.fail(["'scheme'", "';'"])
        return None

    def expr(self) -> PropExpr:
        left = self.term()
        while self.tok.kind == "|":
            self.advance()
            left = Or(left, self.term())
        return left

    def term(self) -> PropExpr:
        left = self.factor()
        while self.tok.kind == "&":
            self.advance()
            left = And(left, self.factor())
        return left

    def factor(self) -> PropExpr:
        tok = self.tok
        if tok.kind == "!":
            self.advance()
            return Not(self.factor())
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if tok.kind == "{":
            return Outcomes(self.outcome_set(allow_empty=True))
        if tok.kind == "IDENT":
            self.resolve(tok, "event", "prop")
            self.advance()
            return Atom(tok.text)
        if tok.kind == "NUMBER" and tok.text in ("0", "1"):
            self.advance()
            return One() if tok.text == "1" else Zero()
        self.fail(["'!'", "'('", "'{'", "name", "'0'", "'1'"])
