"""Declarative scripting language for spaces, events, coevents, assertions and queries."""
from .interpreter import ExecutionError, Report, execute
from .lexer import DslError, DuplicateName, LexError, ParseError, UseBeforeDecl
from .nodes import Script
from .parser import parse
from .printer import format_expr, format_script

__all__ = [
    "DslError", "DuplicateName", "ExecutionError", "LexError", "ParseError", "Report",
    "Script", "UseBeforeDecl", "execute", "format_expr", "format_script", "parse",
]
