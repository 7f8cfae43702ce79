"""Finite sample spaces and their Boolean event algebras.

An :class:`Event` is a bitmask over the outcomes of a :class:`SampleSpace`;
bit ``i`` is membership of outcome ``i``, and the mask read as an unsigned
integer is the event's index. Every enumeration in the package walks events
in that index order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import DuplicateOutcome, EmptySpace, SpaceMismatch, UnboundAtom, UnknownOutcome


@dataclass(frozen=True)
class SampleSpace:
    outcomes: tuple[str, ...]

    def __post_init__(self):
        if not self.outcomes:
            raise EmptySpace()
        seen = set()
        for name in self.outcomes:
            if name in seen:
                raise DuplicateOutcome(name)
            seen.add(name)

    @property
    def n(self) -> int:
        return len(self.outcomes)

    @property
    def num_events(self) -> int:
        return 1 << self.n

    def index(self, name: str) -> int:
        try:
            return self.outcomes.index(name)
        except ValueError:
            raise UnknownOutcome(name) from None

    def event(self, names: Iterable[str] = ()) -> Event:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Event(self, mask)

    def zero(self) -> Event:
        return Event(self, 0)

    def unit(self) -> Event:
        return Event(self, self.num_events - 1)

    def events(self) -> Iterator[Event]:
        """All ``2**n`` events in index order."""
        for mask in range(self.num_events):
            yield Event(self, mask)

    def singletons(self) -> list[Event]:
        return [Event(self, 1 << i) for i in range(self.n)]

    def __repr__(self):
        return "SampleSpace({" + ", ".join(self.outcomes) + "})"


def make_space(names: Iterable[str]) -> SampleSpace:
    return SampleSpace(tuple(names))


@dataclass(frozen=True)
class Event:
    space: SampleSpace
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < self.space.num_events:
            raise ValueError(f"mask {self.mask} out of range for {self.space!r}")

    @property
    def index(self) -> int:
        return self.mask

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(name for i, name in enumerate(self.space.outcomes) if self.mask >> i & 1)

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.space.index(name) & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def is_zero(self) -> bool:
        return self.mask == 0

    def is_unit(self) -> bool:
        return self.mask == self.space.num_events - 1

    def issubset(self, other: Event) -> bool:
        _check_same(self, other)
        return self.mask & ~other.mask == 0

    def __invert__(self):
        return complement(self)

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __repr__(self):
        return "{" + ", ".join(self.members) + "}"


def _check_same(a: Event, b: Event) -> None:
    if a.space != b.space:
        raise SpaceMismatch(a.space, b.space)


def complement(a: Event) -> Event:
    return Event(a.space, (a.space.num_events - 1) ^ a.mask)


def meet(a: Event, b: Event) -> Event:
    _check_same(a, b)
    return Event(a.space, a.mask & b.mask)


def join(a: Event, b: Event) -> Event:
    _check_same(a, b)
    return Event(a.space, a.mask | b.mask)


# Proposition syntax. Trees carry no space; they are bound at evaluation.

@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    child: PropExpr


@dataclass(frozen=True)
class And:
    left: PropExpr
    right: PropExpr


@dataclass(frozen=True)
class Or:
    left: PropExpr
    right: PropExpr


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Outcomes:
    """Literal event listing outcome names, e.g. ``{a, b}``."""

    names: tuple[str, ...]


PropExpr = Union[Atom, Not, And, Or, Zero, One, Outcomes]


def eval_prop(expr: PropExpr, bindings: Mapping[str, Event], space: SampleSpace) -> Event:
    """Denotation of ``expr`` as an event of ``space`` under classical set semantics."""
    if isinstance(expr, Atom):
        try:
            event = bindings[expr.name]
        except KeyError:
            raise UnboundAtom(expr.name) from None
        if event.space != space:
            raise SpaceMismatch(event.space, space)
        return event
    if isinstance(expr, Not):
        return complement(eval_prop(expr.child, bindings, space))
    if isinstance(expr, And):
        return meet(eval_prop(expr.left, bindings, space), eval_prop(expr.right, bindings, space))
    if isinstance(expr, Or):
        return join(eval_prop(expr.left, bindings, space), eval_prop(expr.right, bindings, space))
    if isinstance(expr, Zero):
        return space.zero()
    if isinstance(expr, One):
        return space.unit()
    if isinstance(expr, Outcomes):
        return space.event(expr.names)
    raise TypeError(f"not a proposition: {expr!r}")
