"""Deterministic enumeration and seeded random generation of machines.

Enumeration order is lexicographic over the table entries with states
and letters in declaration order, so sweeps and reports are diffable.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .core import Alphabet, EnumerationTooLarge, MealyMachine, MooreMachine


def _state_names(n):
    return tuple("s%d" % i for i in range(n))


def count_mealy(inp: Alphabet, outp: Alphabet, n_states: int) -> int:
    cells = n_states * len(inp)
    return (n_states ** cells) * (len(outp) ** cells)


def count_moore(inp: Alphabet, outp: Alphabet, n_states: int) -> int:
    cells = n_states * len(inp)
    return (n_states ** cells) * (len(outp) ** n_states)


def all_mealy(inp: Alphabet, outp: Alphabet, n_states: int) -> Iterator[MealyMachine]:
    """Every Mealy machine with exactly n_states states, in table order."""
    states = _state_names(n_states)
    keys = [(e, a) for e in states for a in inp.symbols]
    for targets in itertools.product(states, repeat=len(keys)):
        delta = dict(zip(keys, targets))
        for letters in itertools.product(outp.symbols, repeat=len(keys)):
            yield MealyMachine(inp, outp, states, delta, dict(zip(keys, letters)))


def all_moore(inp: Alphabet, outp: Alphabet, n_states: int) -> Iterator[MooreMachine]:
    """Every Moore machine with exactly n_states states, in table order."""
    states = _state_names(n_states)
    keys = [(e, a) for e in states for a in inp.symbols]
    for targets in itertools.product(states, repeat=len(keys)):
        delta = dict(zip(keys, targets))
        for letters in itertools.product(outp.symbols, repeat=n_states):
            yield MooreMachine(inp, outp, states, delta, dict(zip(states, letters)))


def all_mealy_up_to(inp, outp, max_states, guard=10**7):
    total = sum(count_mealy(inp, outp, k) for k in range(1, max_states + 1))
    if total > guard:
        raise EnumerationTooLarge("%d machines exceed the guard" % total)
    for k in range(1, max_states + 1):
        yield from all_mealy(inp, outp, k)


def all_moore_up_to(inp, outp, max_states, guard=10**7):
    total = sum(count_moore(inp, outp, k) for k in range(1, max_states + 1))
    if total > guard:
        raise EnumerationTooLarge("%d machines exceed the guard" % total)
    for k in range(1, max_states + 1):
        yield from all_moore(inp, outp, k)


def random_mealy(rng: random.Random, inp: Alphabet, outp: Alphabet, n_states: int) -> MealyMachine:
    states = _state_names(n_states)
    delta = {(e, a): rng.choice(states) for e in states for a in inp.symbols}
    out = {(e, a): rng.choice(outp.symbols) for e in states for a in inp.symbols}
    return MealyMachine(inp, outp, states, delta, out)


def random_moore(rng: random.Random, inp: Alphabet, outp: Alphabet, n_states: int) -> MooreMachine:
    states = _state_names(n_states)
    delta = {(e, a): rng.choice(states) for e in states for a in inp.symbols}
    out = {e: rng.choice(outp.symbols) for e in states}
    return MooreMachine(inp, outp, states, delta, out)


def random_cell(rng: random.Random, inp: Alphabet, outp: Alphabet, max_states: int):
    """A random machine of either kind with 1..max_states states."""
    n = rng.randint(1, max_states)
    if rng.random() < 0.5:
        return random_moore(rng, inp, outp, n)
    return random_mealy(rng, inp, outp, n)
