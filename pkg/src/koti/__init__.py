"""Finite-model workbench for coevents and the tetralemma."""
from .algebra import (
    And, Atom, Event, Not, One, Or, Outcomes, SampleSpace, Zero,
    complement, eval_prop, join, make_space, meet,
)
from .coevent import (
    Coevent, SchemeClass, SchemeFilter, apply, capacity, classify, enumerate_coevents,
    from_point, from_support, from_table, one_coevent, zero_coevent,
)
from .errors import (
    CapacityExceeded, DuplicateOutcome, EmptySpace, EmptySupport, KotiError,
    SpaceMismatch, TableLengthMismatch, UnboundAtom, UnknownOutcome,
)
from .second_order import SecondOrderSpace, corner_event, lift, nagarjuna_census, nagarjuna_denies
from .tetralemma import CensusReport, Corner, causation_tetralemma, census, corner, denial_census, deny_all

__version__ = "0.1.0"
