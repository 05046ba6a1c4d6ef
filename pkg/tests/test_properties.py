"""Randomized invariants over machine space, driven by hypothesis."""

import string

from hypothesis import given, settings, strategies as st

from mealymoore import (
    Alphabet,
    MealyMachine,
    MooreMachine,
    PointedMachine,
    compose_cells,
    compose_maps,
    compose_mealy,
    embed_j,
    is_homomorphism,
    is_n_soft,
    is_soft,
    ltimes,
    rtimes,
    check_pentagon,
    trace,
)

from oracles import letter_independent


def alphabets(max_size=3):
    return st.integers(1, max_size).map(
        lambda k: Alphabet("A%d" % k, tuple(string.ascii_lowercase[:k]))
    )


@st.composite
def mealys(draw, inp=None, outp=None, max_states=3):
    inp = inp or draw(alphabets())
    outp = outp or draw(alphabets())
    n = draw(st.integers(1, max_states))
    states = tuple("e%d" % i for i in range(n))
    keys = [(e, a) for e in states for a in inp.symbols]
    delta = dict(zip(keys, draw(st.lists(
        st.sampled_from(states), min_size=len(keys), max_size=len(keys)))))
    out = dict(zip(keys, draw(st.lists(
        st.sampled_from(outp.symbols), min_size=len(keys), max_size=len(keys)))))
    return MealyMachine(inp, outp, states, delta, out)


@st.composite
def moores(draw, inp=None, outp=None, max_states=3):
    inp = inp or draw(alphabets())
    outp = outp or draw(alphabets())
    n = draw(st.integers(1, max_states))
    states = tuple("e%d" % i for i in range(n))
    keys = [(e, a) for e in states for a in inp.symbols]
    delta = dict(zip(keys, draw(st.lists(
        st.sampled_from(states), min_size=len(keys), max_size=len(keys)))))
    out = dict(zip(states, draw(st.lists(
        st.sampled_from(outp.symbols), min_size=n, max_size=n))))
    return MooreMachine(inp, outp, states, delta, out)


@st.composite
def pointed_with_word(draw, machine_strategy):
    m = draw(machine_strategy)
    start = draw(st.sampled_from(m.states))
    word = tuple(draw(st.lists(st.sampled_from(m.input.symbols), max_size=8)))
    return PointedMachine(m, start), word


@given(pointed_with_word(mealys()))
def test_mealy_trace_length(pw):
    p, w = pw
    assert len(trace(p, w)) == len(w)


@given(pointed_with_word(moores()))
def test_moore_trace_length(pw):
    p, w = pw
    assert len(trace(p, w)) == len(w) + 1


@given(pointed_with_word(mealys()), st.data())
def test_trace_prefix_coherence(pw, data):
    p, w = pw
    a = data.draw(st.sampled_from(p.machine.input.symbols))
    assert trace(p, w + (a,))[: len(w)] == trace(p, w)


@given(st.data())
def test_composite_carrier_size(data):
    mid = data.draw(alphabets())
    first = data.draw(mealys(outp=mid))
    second = data.draw(mealys(inp=mid))
    cc = compose_mealy(second, first)
    assert len(cc.states) == len(first.states) * len(second.states)


@given(st.data())
def test_mixed_composites_are_letter_independent(data):
    mid = data.draw(alphabets())
    cc = rtimes(data.draw(mealys(inp=mid)), data.draw(moores(outp=mid)))
    assert isinstance(cc, MooreMachine)
    assert letter_independent(embed_j(cc))
    cc2 = ltimes(data.draw(moores(inp=mid)), data.draw(mealys(outp=mid)))
    assert isinstance(cc2, MooreMachine)
    assert letter_independent(embed_j(cc2))


@settings(max_examples=40)
@given(st.data())
def test_pentagon_random_quadruples(data):
    a1, a2, a3, a4, a5 = (data.draw(alphabets(2)) for _ in range(5))
    kinds = [mealys, moores]
    f = data.draw(data.draw(st.sampled_from(kinds))(inp=a1, outp=a2, max_states=2))
    g = data.draw(data.draw(st.sampled_from(kinds))(inp=a2, outp=a3, max_states=2))
    h = data.draw(data.draw(st.sampled_from(kinds))(inp=a3, outp=a4, max_states=2))
    k = data.draw(data.draw(st.sampled_from(kinds))(inp=a4, outp=a5, max_states=2))
    assert check_pentagon(k, h, g, f)


@given(moores(), st.integers(1, 4))
def test_soft_implies_n_soft(m, n):
    if is_soft(m):
        assert is_n_soft(m, n)


@given(moores(), st.integers(1, 3), st.integers(1, 2))
def test_n_soft_implies_multiples(m, n, k):
    if is_n_soft(m, n):
        assert is_n_soft(m, n * k)


def test_n_soft_hierarchy_is_not_monotone():
    # A period-2 oscillator: out returns to itself after an even number
    # of steps only, so the machine is 2-soft yet not 1- or 3-soft.
    one = Alphabet("one", ("a",))
    two = Alphabet("two", ("x", "y"))
    osc = MooreMachine(
        one, two, ("e0", "e1"),
        {("e0", "a"): "e1", ("e1", "a"): "e0"},
        {"e0": "x", "e1": "y"},
    )
    assert is_n_soft(osc, 2)
    assert not is_n_soft(osc, 1)
    assert not is_n_soft(osc, 3)


@given(moores())
def test_soft_iff_one_soft(m):
    assert is_soft(m) == is_n_soft(m, 1)


@given(st.data())
def test_hom_composition_closure(data):
    from mealymoore import enumerate_homs

    a = data.draw(alphabets(2))
    b = data.draw(alphabets(2))
    m1 = data.draw(mealys(inp=a, outp=b, max_states=2))
    m2 = data.draw(mealys(inp=a, outp=b, max_states=2))
    m3 = data.draw(mealys(inp=a, outp=b, max_states=2))
    for phi in enumerate_homs(m1, m2).homs:
        for psi in enumerate_homs(m2, m3).homs:
            assert is_homomorphism(compose_maps(psi, phi))


@given(st.data())
def test_compose_cells_kind_table(data):
    mid = data.draw(alphabets(2))
    mealy_in = data.draw(mealys(outp=mid, max_states=2))
    mealy_out = data.draw(mealys(inp=mid, max_states=2))
    moore_in = data.draw(moores(outp=mid, max_states=2))
    moore_out = data.draw(moores(inp=mid, max_states=2))
    assert isinstance(compose_cells(mealy_out, mealy_in), MealyMachine)
    assert isinstance(compose_cells(moore_out, mealy_in), MooreMachine)
    assert isinstance(compose_cells(mealy_out, moore_in), MooreMachine)
    assert isinstance(compose_cells(moore_out, moore_in), MooreMachine)
