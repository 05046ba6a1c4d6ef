import pytest

from mealymoore import Alphabet, MealyMachine, MooreMachine, universal_p, universal_u

BITS = Alphabet("bits", ("0", "1"))


def make_par():
    """XOR-accumulating Mealy machine: output and next state are i XOR a."""
    delta = {
        ("q0", "0"): "q0", ("q0", "1"): "q1",
        ("q1", "0"): "q1", ("q1", "1"): "q0",
    }
    out = {
        ("q0", "0"): "0", ("q0", "1"): "1",
        ("q1", "0"): "1", ("q1", "1"): "0",
    }
    return MealyMachine(BITS, BITS, ("q0", "q1"), delta, out)


def make_cpar():
    """Moore parity counter: state tracks the running XOR and is emitted."""
    delta = {
        ("q0", "0"): "q0", ("q0", "1"): "q1",
        ("q1", "0"): "q1", ("q1", "1"): "q0",
    }
    return MooreMachine(BITS, BITS, ("q0", "q1"), delta, {"q0": "0", "q1": "1"})


@pytest.fixture
def bits():
    return BITS


@pytest.fixture
def par():
    return make_par()


@pytest.fixture
def cpar():
    return make_cpar()


@pytest.fixture
def u2():
    return universal_u(BITS)


@pytest.fixture
def p2():
    return universal_p(BITS)
