"""The four alternatives for an event and its complement, and censuses over them."""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Sequence

from .algebra import Event, SampleSpace, complement, make_space
from .coevent import Coevent, SchemeFilter, apply, count_coevents, tally
from .errors import SpaceMismatch


class Corner(enum.IntEnum):
    C1 = 1
    C2 = 2
    C3 = 3
    C4 = 4

    @property
    def reading(self) -> str:
        return _READINGS[self]

    @property
    def bits(self) -> tuple[int, int]:
        """``(phi(A), phi(not A))`` for this corner."""
        return _BITS[self]


_BITS = {Corner.C1: (1, 0), Corner.C2: (0, 1), Corner.C3: (1, 1), Corner.C4: (0, 0)}
_BY_BITS = {v: k for k, v in _BITS.items()}
_READINGS = {
    Corner.C1: "affirm A, deny not-A",
    Corner.C2: "deny A, affirm not-A",
    Corner.C3: "affirm both A and not-A",
    Corner.C4: "deny both A and not-A",
}


def corner(phi: Coevent, a: Event) -> Corner:
    return _BY_BITS[apply(phi, a), apply(phi, complement(a))]


@dataclass(frozen=True)
class CensusReport:
    space: SampleSpace
    event: Event
    scheme: SchemeFilter
    counts: tuple[int, int, int, int]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, c: Corner) -> int:
        return self.counts[int(c) - 1]

    def as_dict(self) -> dict:
        return {
            "space": list(self.space.outcomes),
            "event": list(self.event.members),
            "scheme": self.scheme.value,
            "corners": {f"c{i + 1}": n for i, n in enumerate(self.counts)},
            "total": self.total,
        }


def census(space: SampleSpace, a: Event, scheme: SchemeFilter = SchemeFilter.ALL, jobs: int = 1) -> CensusReport:
    scheme = SchemeFilter.parse(scheme)
    if a.space != space:
        raise SpaceMismatch(space, a.space)
    counts = tally(space, scheme, functools.partial(_corner_of, a=a), jobs=jobs)
    report = CensusReport(space, a, scheme, tuple(counts[c] for c in Corner))
    assert report.total == count_coevents(space, scheme)
    return report


def _corner_of(phi, a):
    return corner(phi, a)


def deny_all(phi: Coevent, cells: Sequence[Event]) -> bool:
    return all(apply(phi, cell) == 0 for cell in cells)


def denial_census(space: SampleSpace, cells: Sequence[Event], scheme: SchemeFilter = SchemeFilter.ALL, jobs: int = 1) -> int:
    """Number of coevents under ``scheme`` that deny every one of ``cells``."""
    scheme = SchemeFilter.parse(scheme)
    cells = tuple(cells)
    for cell in cells:
        if cell.space != space:
            raise SpaceMismatch(space, cell.space)
    return tally(space, scheme, functools.partial(deny_all, cells=cells), jobs=jobs)[True]


CAUSES = ("none", "self", "other", "both")


def causation_tetralemma() -> tuple[SampleSpace, list[Event]]:
    """Cause space whose outcomes are the subsets of {self, other}.

    Cells come back as (self only, other only, both, none).
    """
    space = make_space(CAUSES)
    return space, [space.event([name]) for name in ("self", "other", "both", "none")]
