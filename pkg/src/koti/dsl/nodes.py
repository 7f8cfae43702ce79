"""Statement nodes. Expressions reuse the proposition trees of :mod:`koti.algebra`.

Every statement keeps its source position in ``loc``; positions are excluded
from equality so that reformatted scripts compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..algebra import PropExpr

Loc = tuple[int, int]


def _loc():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    outcomes: tuple[str, ...]
    loc: Loc = _loc()


@dataclass(frozen=True)
class EventDecl:
    name: str
    expr: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class PropDecl:
    """An unasserted proposition: it is stored and can be referenced, never valued."""

    name: str
    expr: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class CoeventDecl:
    name: str
    kind: str  # point | support | table | zero
    arg: Union[str, tuple[str, ...], None] = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class Affirm:
    coevent: str
    expr: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class Deny:
    coevent: str
    expr: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class EventEq:
    left: PropExpr
    right: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class CornerQuery:
    coevent: str
    expr: PropExpr
    loc: Loc = _loc()


@dataclass(frozen=True)
class CensusQuery:
    expr: PropExpr
    scheme: Optional[str] = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class DenyAllQuery:
    coevent: str
    cells: tuple[PropExpr, ...]
    loc: Loc = _loc()


@dataclass(frozen=True)
class DenialCensusQuery:
    cells: tuple[PropExpr, ...]
    scheme: Optional[str] = None
    loc: Loc = _loc()


@dataclass(frozen=True)
class ClassifyQuery:
    coevent: str
    loc: Loc = _loc()


@dataclass(frozen=True)
class NagarjunaQuery:
    expr: PropExpr
    universe: str
    scheme2: str
    loc: Loc = _loc()


@dataclass(frozen=True)
class CausationQuery:
    loc: Loc = _loc()


Statement = Union[
    SpaceDecl, EventDecl, PropDecl, CoeventDecl, Affirm, Deny, EventEq,
    CornerQuery, CensusQuery, DenyAllQuery, DenialCensusQuery, ClassifyQuery,
    NagarjunaQuery, CausationQuery,
]
ASSERTIONS = (Affirm, Deny, EventEq)
QUERIES = (CornerQuery, CensusQuery, DenyAllQuery, DenialCensusQuery, ClassifyQuery, NagarjunaQuery, CausationQuery)


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    @property
    def space(self) -> Optional[SpaceDecl]:
        for s in self.statements:
            if isinstance(s, SpaceDecl):
                return s
        return None
