"""Coevents: total 0/1 valuations on the event algebra of a finite space.

A coevent may be stored three ways. ``dense`` keeps the whole table as an
integer whose bit ``i`` is the value on event ``i``; ``point`` keeps an
outcome index ``x`` (value 1 iff ``x`` is in the event); ``support`` keeps a
nonempty outcome mask ``S`` (value 1 iff ``S`` is contained in the event).
Equality and hashing go through the dense table, so the storage choice is
invisible to callers.
"""
from __future__ import annotations

import contextlib
import contextvars
import enum
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Sequence, Union

from .algebra import Event, SampleSpace
from .errors import CapacityExceeded, EmptySupport, SpaceMismatch, TableLengthMismatch, UnknownOutcome

HARD_DENSE_N = 4
CLASSIFY_N = 6
SPARSE_N = 20

_dense_override: contextvars.ContextVar[int | None] = contextvars.ContextVar("dense_override", default=None)


def dense_cap() -> int:
    """Largest n for which every dense table may be enumerated.

    ``KOTI_MAX_DENSE_N`` and :func:`capacity` can only lower the hard cap.
    """
    cap = HARD_DENSE_N
    env = os.environ.get("KOTI_MAX_DENSE_N")
    if env:
        cap = min(cap, int(env))
    override = _dense_override.get()
    if override is not None:
        cap = min(cap, override)
    return cap


@contextlib.contextmanager
def capacity(max_dense_n: int | None = None):
    token = _dense_override.set(max_dense_n)
    try:
        yield
    finally:
        _dense_override.reset(token)


class SchemeFilter(enum.Enum):
    ALL = "all"
    MULTIPLICATIVE = "multiplicative"
    HOMOMORPHIC = "homomorphic"

    @classmethod
    def parse(cls, text: Union[str, "SchemeFilter"]) -> "SchemeFilter":
        if isinstance(text, cls):
            return text
        return cls(text.lower())

    def admits(self, cls: "SchemeClass") -> bool:
        if self is SchemeFilter.ALL:
            return True
        if self is SchemeFilter.MULTIPLICATIVE:
            return cls.is_multiplicative and cls.is_unital and cls.is_proper
        return cls.is_homomorphic


class Coevent:
    __slots__ = ("space", "kind", "value", "_table")

    def __init__(self, space: SampleSpace, kind: str, value: int):
        if kind not in ("dense", "point", "support"):
            raise ValueError(f"unknown coevent representation {kind!r}")
        self.space = space
        self.kind = kind
        self.value = value
        self._table = value if kind == "dense" else None

    def __call__(self, event: Event) -> int:
        return apply(self, event)

    @property
    def table(self) -> int:
        """Dense table as an integer; bit ``i`` is the value on event ``i``."""
        if self._table is None:
            t = 0
            for mask in range(self.space.num_events):
                if self._bit(mask):
                    t |= 1 << mask
            self._table = t
        return self._table

    def bits(self) -> list[int]:
        t = self.table
        return [t >> i & 1 for i in range(self.space.num_events)]

    def bitstring(self) -> str:
        return "".join(map(str, self.bits()))

    def _bit(self, mask: int) -> int:
        if self.kind == "dense":
            return self.value >> mask & 1
        if self.kind == "point":
            return mask >> self.value & 1
        return int(self.value & ~mask == 0)

    def canonical(self) -> Coevent:
        return Coevent(self.space, "dense", self.table)

    def __eq__(self, other):
        if not isinstance(other, Coevent):
            return NotImplemented
        if self.space != other.space:
            return False
        if self.kind == other.kind:
            return self.value == other.value
        return self.table == other.table

    def __hash__(self):
        return hash((self.space, self.table))

    def __reduce__(self):
        return (Coevent, (self.space, self.kind, self.value))

    def __repr__(self):
        if self.kind == "point":
            return f"Point({self.space.outcomes[self.value]})"
        if self.kind == "support":
            members = [o for i, o in enumerate(self.space.outcomes) if self.value >> i & 1]
            return "Support({" + ", ".join(members) + "})"
        return f"Dense({self.bitstring()})"


def apply(phi: Coevent, event: Event) -> int:
    if event.space != phi.space:
        raise SpaceMismatch(phi.space, event.space)
    return phi._bit(event.mask)


def from_point(space: SampleSpace, x: Union[str, int]) -> Coevent:
    if isinstance(x, str):
        x = space.index(x)
    elif not 0 <= x < space.n:
        raise UnknownOutcome(str(x))
    return Coevent(space, "point", x)


def from_support(space: SampleSpace, support: Union[Event, Sequence[str]]) -> Coevent:
    if isinstance(support, Event):
        if support.space != space:
            raise SpaceMismatch(space, support.space)
        mask = support.mask
    else:
        mask = space.event(support).mask
    if mask == 0:
        raise EmptySupport()
    return Coevent(space, "support", mask)


def from_table(space: SampleSpace, bits: Union[str, Sequence[int]]) -> Coevent:
    """Dense coevent from ``2**n`` bits, the ``i``-th being the value on event ``i``."""
    bits = [int(b) for b in bits]
    if len(bits) != space.num_events:
        raise TableLengthMismatch(space.num_events, len(bits))
    t = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"table entries must be 0 or 1, got {b}")
        t |= b << i
    return Coevent(space, "dense", t)


def from_table_int(space: SampleSpace, table: int) -> Coevent:
    if not 0 <= table < 1 << space.num_events:
        raise ValueError(f"table integer {table} out of range")
    return Coevent(space, "dense", table)


def zero_coevent(space: SampleSpace) -> Coevent:
    return Coevent(space, "dense", 0)


def one_coevent(space: SampleSpace) -> Coevent:
    return Coevent(space, "dense", (1 << space.num_events) - 1)


@dataclass(frozen=True)
class SchemeClass:
    is_zero: bool
    is_unital: bool
    is_proper: bool
    is_multiplicative: bool
    is_homomorphic: bool

    def as_dict(self) -> dict:
        return {
            "is_zero": self.is_zero,
            "is_unital": self.is_unital,
            "is_proper": self.is_proper,
            "is_multiplicative": self.is_multiplicative,
            "is_homomorphic": self.is_homomorphic,
        }


def classify(phi: Coevent) -> SchemeClass:
    """Scheme flags, checked over every pair of events."""
    n = phi.space.n
    if n > CLASSIFY_N:
        raise CapacityExceeded("classify", n, CLASSIFY_N)
    size = phi.space.num_events
    full = size - 1
    v = phi.bits()
    multiplicative = all(v[a & b] == v[a] & v[b] for a in range(size) for b in range(a, size))
    unital = v[full] == 1
    proper = v[0] == 0
    homomorphic = (
        unital
        and multiplicative
        and all(v[a | b] == v[a] | v[b] for a in range(size) for b in range(a, size))
        and all(v[full ^ a] == 1 - v[a] for a in range(size))
    )
    return SchemeClass(
        is_zero=not any(v),
        is_unital=unital,
        is_proper=proper,
        is_multiplicative=multiplicative,
        is_homomorphic=homomorphic,
    )


def check_capacity(space: SampleSpace, scheme: SchemeFilter) -> None:
    if scheme is SchemeFilter.ALL:
        limit = dense_cap()
        if space.n > limit:
            raise CapacityExceeded("enumerate all coevents", space.n, limit)
    elif space.n > SPARSE_N:
        raise CapacityExceeded(f"enumerate {scheme.value} coevents", space.n, SPARSE_N)


def count_coevents(space: SampleSpace, scheme: SchemeFilter) -> int:
    if scheme is SchemeFilter.ALL:
        return 1 << space.num_events
    if scheme is SchemeFilter.MULTIPLICATIVE:
        return space.num_events - 1
    return space.n


def coevent_at(space: SampleSpace, scheme: SchemeFilter, index: int) -> Coevent:
    """The ``index``-th coevent of the enumeration order for ``scheme``."""
    if scheme is SchemeFilter.ALL:
        return Coevent(space, "dense", index)
    if scheme is SchemeFilter.MULTIPLICATIVE:
        return Coevent(space, "support", index + 1)
    return Coevent(space, "point", index)


def enumerate_coevents(space: SampleSpace, scheme: SchemeFilter = SchemeFilter.ALL) -> Iterator[Coevent]:
    """Deterministic stream of every coevent admitted by ``scheme``.

    ALL walks dense tables in increasing integer order, MULTIPLICATIVE walks
    supports in increasing mask order and HOMOMORPHIC walks points in outcome
    order.
    """
    scheme = SchemeFilter.parse(scheme)
    check_capacity(space, scheme)
    for i in range(count_coevents(space, scheme)):
        yield coevent_at(space, scheme, i)


def _tally_range(space, scheme, key, lo, hi):
    c = Counter()
    for i in range(lo, hi):
        c[key(coevent_at(space, scheme, i))] += 1
    return c


def tally(
    space: SampleSpace,
    scheme: SchemeFilter,
    key: Callable[[Coevent], Hashable],
    jobs: int = 1,
) -> Counter:
    """Count enumerated coevents by ``key``.

    With ``jobs > 1`` the index range is split into chunks handed to a process
    pool; ``key`` must then be picklable. Counts are merged in chunk order, so
    the result does not depend on ``jobs``.
    """
    scheme = SchemeFilter.parse(scheme)
    check_capacity(space, scheme)
    total = count_coevents(space, scheme)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or total < 1024:
        return _tally_range(space, scheme, key, 0, total)
    chunks = jobs * 4
    bounds = [total * k // chunks for k in range(chunks + 1)]
    merged = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_tally_range, space, scheme, key, bounds[k], bounds[k + 1])
            for k in range(chunks)
        ]
        for f in futures:
            merged.update(f.result())
    return merged
