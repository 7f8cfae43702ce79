"""Coevents about coevents.

The enumerated coevents of a base space become the outcomes of a new
:class:`SampleSpace`; corner conditions on the base become events there, and
everything downstream is the ordinary first-order machinery.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Event, SampleSpace, make_space
from .coevent import CLASSIFY_N, Coevent, SchemeFilter, enumerate_coevents
from .errors import CapacityExceeded, SpaceMismatch
from .tetralemma import Corner, corner, denial_census, deny_all

# Outcome labels embed the dense table integer, so lifted bases stay small.
LIFT_CAPS = {SchemeFilter.ALL: 2, SchemeFilter.MULTIPLICATIVE: 4, SchemeFilter.HOMOMORPHIC: CLASSIFY_N}
# Full scans of second-order supports stop at 2**16 - 1 candidates.
NAGARJUNA_MULTIPLICATIVE_OUTCOMES = 16


def outcome_label(index: int, phi: Coevent) -> str:
    return f"phi_{index}_{phi.table}"


@dataclass(frozen=True)
class SecondOrderSpace:
    base: SampleSpace
    universe_filter: SchemeFilter
    outcomes: tuple[Coevent, ...]
    as_space: SampleSpace

    @property
    def labels(self) -> tuple[str, ...]:
        return self.as_space.outcomes

    def outcome(self, label: str) -> Coevent:
        return self.outcomes[self.as_space.index(label)]


def lift(base: SampleSpace, universe: SchemeFilter = SchemeFilter.ALL) -> SecondOrderSpace:
    universe = SchemeFilter.parse(universe)
    limit = LIFT_CAPS[universe]
    if base.n > limit:
        raise CapacityExceeded(f"lift over {universe.value} coevents", base.n, limit)
    outcomes = tuple(enumerate_coevents(base, universe))
    labels = [outcome_label(i, phi) for i, phi in enumerate(outcomes)]
    return SecondOrderSpace(base, universe, outcomes, make_space(labels))


def corner_event(so: SecondOrderSpace, a: Event, c: Corner) -> Event:
    """Second-order event: the base coevents that land in corner ``c`` for ``a``."""
    if a.space != so.base:
        raise SpaceMismatch(so.base, a.space)
    mask = 0
    for i, phi in enumerate(so.outcomes):
        if corner(phi, a) == c:
            mask |= 1 << i
    return Event(so.as_space, mask)


def corner_events(so: SecondOrderSpace, a: Event) -> list[Event]:
    return [corner_event(so, a, c) for c in Corner]


def nagarjuna_denies(so: SecondOrderSpace, psi: Coevent, a: Event) -> bool:
    """True iff ``psi`` denies all four corner events of ``a``."""
    if psi.space != so.as_space:
        raise SpaceMismatch(so.as_space, psi.space)
    return deny_all(psi, corner_events(so, a))


def nagarjuna_census(so: SecondOrderSpace, a: Event, scheme2: SchemeFilter = SchemeFilter.MULTIPLICATIVE, jobs: int = 1) -> int:
    scheme2 = SchemeFilter.parse(scheme2)
    if scheme2 is SchemeFilter.MULTIPLICATIVE and so.as_space.n > NAGARJUNA_MULTIPLICATIVE_OUTCOMES:
        raise CapacityExceeded("nagarjuna census over second-order supports", so.as_space.n, NAGARJUNA_MULTIPLICATIVE_OUTCOMES)
    return denial_census(so.as_space, corner_events(so, a), scheme2, jobs=jobs)
