from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import KotiError


class DslError(KotiError):
    """Error tied to a source position (1-based line and column)."""

    def __init__(self, message, line, column, lexeme=None):
        self.message = message
        self.line = line
        self.column = column
        self.lexeme = lexeme
        where = f"{line}:{column}"
        if lexeme is not None:
            where += f" at {lexeme!r}"
        super().__init__(f"{where}: {message}")


class LexError(DslError):
    pass


class ParseError(DslError):
    def __init__(self, message, line, column, lexeme=None, expected=()):
        self.expected = tuple(expected)
        if self.expected:
            message += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(message, line, column, lexeme)


class DuplicateName(DslError):
    pass


class UseBeforeDecl(DslError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, NUMBER, STRING, EOF, or the punctuation itself
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<NUMBER>[0-9]+)
  | (?P<STRING>"[^"\n]*")
  | (?P<punct>==|[{}(),;=!&|])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            if text[pos] == '"':
                raise LexError("unterminated string", line, col, text[pos:].split("\n", 1)[0])
            raise LexError("unexpected character", line, col, text[pos])
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind == "punct":
            tokens.append(Token(lexeme, lexeme, line, col))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, lexeme, line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens
