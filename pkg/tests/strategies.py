from hypothesis import strategies as st

from koti.algebra import And, Atom, Event, Not, One, Or, Zero, make_space

NAMES = "abcdef"


@st.composite
def spaces(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return make_space(NAMES[:n])


@st.composite
def events(draw, space):
    return Event(space, draw(st.integers(0, space.num_events - 1)))


@st.composite
def space_and_events(draw, k=1, max_n=4):
    s = draw(spaces(max_n))
    return (s, *[draw(events(s)) for _ in range(k)])


def exprs(atoms=("A", "B"), max_depth=4):
    leaves = st.sampled_from([Atom(a) for a in atoms] + [Zero(), One()])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth)


def depth(e):
    if isinstance(e, Not):
        return 1 + depth(e.child)
    if isinstance(e, (And, Or)):
        return 1 + max(depth(e.left), depth(e.right))
    return 0
