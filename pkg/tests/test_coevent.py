import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from koti.algebra import Event, make_space
from koti.coevent import (
    Coevent, SchemeFilter, apply, capacity, classify, coevent_at, count_coevents, dense_cap,
    enumerate_coevents, from_point, from_support, from_table, from_table_int, one_coevent, tally,
    zero_coevent,
)
from koti.errors import CapacityExceeded, EmptySupport, SpaceMismatch, TableLengthMismatch, UnknownOutcome
from strategies import space_and_events, spaces

AB = make_space("ab")
SMALL = [make_space("abc"[:n]) for n in (1, 2, 3)]


def as_valuation(phi):
    """Translate a coevent into the oracle's dict-of-frozensets form."""
    return {frozenset(e.members): apply(phi, e) for e in phi.space.events()}


def test_apply_examples():
    assert apply(from_point(AB, "a"), AB.event("ab")) == 1
    s = from_support(AB, "ab")
    assert apply(s, AB.event("a")) == 0
    assert apply(s, AB.event("b")) == 0
    z = zero_coevent(AB)
    assert all(apply(z, e) == 0 for e in AB.events())


def test_apply_space_mismatch():
    with pytest.raises(SpaceMismatch):
        apply(from_point(AB, "a"), make_space("abc").event("a"))


def test_constructor_tables():
    assert from_point(AB, "a").bits() == [0, 1, 0, 1]
    assert from_support(AB, "ab").bits() == [0, 0, 0, 1]
    assert from_table(AB, "0110").bits() == [0, 1, 1, 0]
    assert from_table(AB, [0, 1, 1, 0]).table == 0b0110


def test_constructor_errors():
    with pytest.raises(EmptySupport):
        from_support(AB, [])
    with pytest.raises(TableLengthMismatch) as exc:
        from_table(AB, "010")
    assert (exc.value.expected, exc.value.got) == (4, 3)
    with pytest.raises(UnknownOutcome):
        from_point(AB, "c")
    with pytest.raises(UnknownOutcome):
        from_point(AB, 5)


def test_equality_is_representation_independent():
    p = from_point(AB, "a")
    assert p == from_table(AB, "0101")
    assert hash(p) == hash(from_table(AB, "0101"))
    assert from_support(AB, "a") == p
    assert p.canonical() == p
    assert p.canonical().canonical().kind == "dense"
    assert from_point(AB, "a") != from_point(make_space("abc"), "a")


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
def test_dense_view_is_total_and_binary(space):
    for phi in enumerate_coevents(space, SchemeFilter.ALL):
        bits = phi.bits()
        assert len(bits) == space.num_events
        assert set(bits) <= {0, 1}


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
def test_point_and_support_semantics(space):
    for x in space.outcomes:
        phi = from_point(space, x)
        assert as_valuation(phi) == oracles.point_valuation(space.outcomes, x)
    for s in space.events():
        if s.mask:
            phi = from_support(space, s)
            assert as_valuation(phi) == oracles.support_valuation(space.outcomes, s.members)


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
def test_classify_matches_oracle(space):
    for phi in enumerate_coevents(space, SchemeFilter.ALL):
        v = as_valuation(phi)
        c = classify(phi)
        assert c.is_multiplicative == oracles.is_multiplicative(v)
        assert c.is_unital == oracles.is_unital(v, space.outcomes)
        assert c.is_proper == oracles.is_proper(v)
        assert c.is_homomorphic == oracles.is_homomorphic(v, space.outcomes)
        assert c.is_zero == (not any(v.values()))
        if c.is_homomorphic:
            assert c.is_multiplicative and c.is_unital and c.is_proper


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
def test_support_characterization(space):
    passing = {phi for phi in enumerate_coevents(space) if SchemeFilter.MULTIPLICATIVE.admits(classify(phi))}
    supports = {from_support(space, e) for e in space.events() if e.mask}
    assert passing == supports
    assert len(passing) == 2 ** space.n - 1


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
def test_point_characterization(space):
    passing = {phi for phi in enumerate_coevents(space) if classify(phi).is_homomorphic}
    assert passing == {from_point(space, x) for x in space.outcomes}
    assert len(passing) == space.n


def test_constant_one_is_not_proper():
    c = classify(one_coevent(AB))
    assert c.is_multiplicative and c.is_unital
    assert not c.is_proper
    assert not SchemeFilter.MULTIPLICATIVE.admits(c)


def test_zero_coevent_classification():
    c = classify(zero_coevent(AB))
    assert c.is_zero and c.is_multiplicative and not c.is_unital
    assert not SchemeFilter.MULTIPLICATIVE.admits(c)


@given(spaces(max_n=5), st.data())
def test_classify_is_representation_invariant(space, data):
    x = data.draw(st.sampled_from(space.outcomes))
    p = from_point(space, x)
    assert classify(p) == classify(p.canonical())
    mask = data.draw(st.integers(1, space.num_events - 1))
    s = Coevent(space, "support", mask)
    assert classify(s) == classify(s.canonical())


def test_classify_cap():
    classify(from_point(make_space("abcdef"), "a"))
    with pytest.raises(CapacityExceeded):
        classify(from_point(make_space("abcdefg"), "a"))


@given(space_and_events(k=1, max_n=4))
def test_anhomomorphic_freedom(sa):
    space, a = sa
    if a.is_zero() or a.is_unit():
        return
    neither = from_table_int(space, 0)
    both = from_table_int(space, (1 << a.mask) | (1 << (~a).mask))
    assert apply(neither, a) == apply(neither, ~a) == 0
    assert apply(both, a) == apply(both, ~a) == 1


def test_enumerate_counts_and_order():
    assert len(list(enumerate_coevents(AB, SchemeFilter.ALL))) == 16
    assert [p.table for p in enumerate_coevents(AB, SchemeFilter.ALL)] == list(range(16))
    mult = list(enumerate_coevents(AB, SchemeFilter.MULTIPLICATIVE))
    assert mult == [from_support(AB, "a"), from_support(AB, "b"), from_support(AB, "ab")]
    hom = list(enumerate_coevents(make_space("abc"), SchemeFilter.HOMOMORPHIC))
    assert hom == [from_point(make_space("abc"), x) for x in "abc"]


@pytest.mark.parametrize("space", SMALL, ids=lambda s: f"n{s.n}")
@pytest.mark.parametrize("scheme", list(SchemeFilter), ids=lambda f: f.value)
def test_enumerate_matches_filtered_dense_scan(space, scheme):
    got = list(enumerate_coevents(space, scheme))
    want = [phi for phi in enumerate_coevents(space, SchemeFilter.ALL) if scheme.admits(classify(phi))]
    assert set(got) == set(want)
    assert len(got) == len(set(got)) == count_coevents(space, scheme)
    assert [coevent_at(space, scheme, i) for i in range(len(got))] == got


def test_enumerate_is_stable():
    s = make_space("abcd")
    first = [p.table for p in enumerate_coevents(s, SchemeFilter.ALL)]
    assert first == [p.table for p in enumerate_coevents(s, SchemeFilter.ALL)]
    assert len(set(first)) == 65536


def test_enumerate_capacity():
    with pytest.raises(CapacityExceeded) as exc:
        next(enumerate_coevents(make_space("abcde"), SchemeFilter.ALL))
    assert exc.value.limit == 4
    assert len(list(enumerate_coevents(make_space([f"o{i}" for i in range(20)]), "homomorphic"))) == 20
    with pytest.raises(CapacityExceeded):
        next(enumerate_coevents(make_space([f"o{i}" for i in range(21)]), "multiplicative"))


def test_dense_cap_can_only_be_lowered(monkeypatch):
    assert dense_cap() == 4
    monkeypatch.setenv("KOTI_MAX_DENSE_N", "9")
    assert dense_cap() == 4
    monkeypatch.setenv("KOTI_MAX_DENSE_N", "2")
    assert dense_cap() == 2
    with pytest.raises(CapacityExceeded):
        next(enumerate_coevents(make_space("abc")))
    monkeypatch.delenv("KOTI_MAX_DENSE_N")
    with capacity(max_dense_n=1):
        assert dense_cap() == 1
    with capacity(max_dense_n=10):
        assert dense_cap() == 4


def _low_bit(phi):
    return phi.table & 1


@settings(deadline=None, max_examples=5)
@given(st.integers(2, 4))
def test_tally_independent_of_jobs(jobs):
    s = make_space("abcd")
    assert tally(s, SchemeFilter.ALL, _low_bit, jobs=jobs) == tally(s, SchemeFilter.ALL, _low_bit, jobs=1)


def test_pickle_roundtrip_keeps_representation():
    import pickle
    p = from_support(make_space("abc"), "ab")
    q = pickle.loads(pickle.dumps(p))
    assert q == p and q.kind == "support"


def test_event_out_of_range():
    with pytest.raises(ValueError):
        Event(AB, 4)
