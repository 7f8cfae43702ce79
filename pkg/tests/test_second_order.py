import pytest

import oracles
from koti.algebra import make_space
from koti.coevent import SchemeFilter, classify, from_point, from_support, from_table_int
from koti.errors import CapacityExceeded, SpaceMismatch
from koti.second_order import SecondOrderSpace, corner_event, corner_events, lift, nagarjuna_census, nagarjuna_denies
from koti.tetralemma import Corner, corner, denial_census

AB = make_space("ab")
A = AB.event("a")


def assert_partition(so, a):
    cells = corner_events(so, a)
    union = 0
    for i, c in enumerate(cells):
        for d in cells[i + 1:]:
            assert c.mask & d.mask == 0
        union |= c.mask
    assert union == so.as_space.num_events - 1


def test_lift_sizes():
    assert lift(AB, "all").as_space.n == 16
    assert lift(AB, "multiplicative").as_space.n == 3
    assert lift(AB, "homomorphic").as_space.n == 2
    with pytest.raises(CapacityExceeded):
        lift(make_space("abcde"), "all")
    with pytest.raises(CapacityExceeded):
        lift(make_space("abc"), "all")
    with pytest.raises(CapacityExceeded):
        lift(make_space("abcde"), "multiplicative")


def test_lift_labels_follow_enumeration():
    so = lift(AB, "multiplicative")
    assert so.labels == tuple(f"phi_{i}_{phi.table}" for i, phi in enumerate(so.outcomes))
    assert so.labels[0] == "phi_0_10"  # support {a}: affirms {a} (bit 1) and {a,b} (bit 3)
    assert so.outcome("phi_2_8") == from_support(AB, "ab")


def test_corner_event_examples():
    so = lift(AB, "all")
    assert [len(e) for e in corner_events(so, A)] == [4, 4, 4, 4]
    mso = lift(AB, "multiplicative")
    assert corner_event(mso, A, Corner.C3).is_zero()


def test_corner_event_members():
    so = lift(AB, "all")
    for c in Corner:
        members = corner_event(so, A, c).members
        assert all(corner(so.outcome(m), A) == c for m in members)


def test_corner_event_space_mismatch():
    with pytest.raises(SpaceMismatch):
        corner_event(lift(AB, "all"), make_space("abc").event("a"), Corner.C1)


@pytest.mark.parametrize("universe,base", [
    ("all", make_space("a")), ("all", AB),
    ("multiplicative", AB), ("multiplicative", make_space("abc")), ("multiplicative", make_space("abcd")),
    ("homomorphic", make_space("abcd")),
])
def test_corner_events_partition(universe, base):
    so = lift(base, universe)
    for a in base.events():
        assert_partition(so, a)


def test_nagarjuna_denies_examples():
    so = lift(AB, "all")
    cells = corner_events(so, A)
    c1 = cells[0].members[0]
    c2 = cells[1].members[0]
    psi = from_support(so.as_space, [c1, c2])
    assert nagarjuna_denies(so, psi, A)
    for label in so.labels:
        assert not nagarjuna_denies(so, from_point(so.as_space, label), A)


def test_multiplicative_second_order_denies_empty_corner():
    so = lift(AB, "multiplicative")
    c3 = corner_event(so, A, Corner.C3)
    for mask in range(1, 8):
        psi = from_support(so.as_space, [so.labels[i] for i in range(3) if mask >> i & 1])
        assert psi(c3) == 0


def test_nagarjuna_denies_space_mismatch():
    so = lift(AB, "all")
    with pytest.raises(SpaceMismatch):
        nagarjuna_denies(so, from_point(AB, "a"), A)


@pytest.mark.parametrize("universe,scheme2,expected", [
    ("all", "multiplicative", 65475),
    ("multiplicative", "multiplicative", 4),
    ("all", "homomorphic", 0),
])
def test_nagarjuna_census_examples(universe, scheme2, expected):
    so = lift(AB, universe)
    assert nagarjuna_census(so, A, scheme2) == expected


@pytest.mark.parametrize("universe", ["all", "multiplicative", "homomorphic"])
def test_nagarjuna_census_matches_oracle(universe):
    for a in AB.events():
        so = lift(AB, universe)
        assert nagarjuna_census(so, a, "multiplicative") == oracles.nagarjuna_supports(AB.outcomes, a.members, universe)
        assert nagarjuna_census(so, a, "homomorphic") == oracles.nagarjuna_points(AB.outcomes, a.members, universe) == 0


def test_nagarjuna_census_jobs():
    so = lift(AB, "all")
    assert nagarjuna_census(so, A, "multiplicative", jobs=2) == 65475


def test_nagarjuna_census_capacity():
    so = lift(AB, "all")
    with pytest.raises(CapacityExceeded):
        nagarjuna_census(so, A, "all")
    with pytest.raises(CapacityExceeded):
        lift(make_space("abcdefg"), "homomorphic")
    # a hand-built universe wider than any lift produces
    base = make_space([f"o{i}" for i in range(17)])
    points = tuple(from_point(base, i) for i in range(17))
    wide = SecondOrderSpace(base, SchemeFilter.HOMOMORPHIC, points, make_space([f"x{i}" for i in range(17)]))
    with pytest.raises(CapacityExceeded):
        nagarjuna_census(wide, base.event(["o0"]), "multiplicative")


def test_third_order_tower():
    so2 = lift(AB, "multiplicative")
    so3 = lift(so2.as_space, "multiplicative")
    assert so3.as_space.n == 7
    for a in so2.as_space.events():
        assert_partition(so3, a)
        assert nagarjuna_census(so3, a, "homomorphic") == 0
    assert lift(so2.as_space, "homomorphic").as_space.n == 3


def test_sixteen_combinations_over_four_cells():
    # any partition into four cells: second-order dense coevents realize all 16 assignments
    base4 = make_space("abcd")
    so4 = lift(base4, "homomorphic")
    cells = so4.as_space.singletons()
    assert len(cells) == 4
    seen = set()
    for t in range(1 << so4.as_space.num_events):
        psi = from_table_int(so4.as_space, t)
        seen.add(tuple(psi(c) for c in cells))
    assert len(seen) == 16
    assert (0, 0, 0, 0) in seen
    assert denial_census(so4.as_space, cells, "all") == 2 ** 12


def test_points_classify_homomorphic_at_second_order():
    so = lift(AB, "multiplicative")
    for label in so.labels:
        assert SchemeFilter.HOMOMORPHIC.admits(classify(from_point(so.as_space, label)))
