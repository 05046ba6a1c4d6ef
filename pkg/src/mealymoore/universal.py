"""Universal cells and conversion functors between Moore and Mealy machines.

``universal_u`` is the one-step register (output the state, store the
last input); post-composing with it moorifies a Mealy machine.
``universal_p`` is the frozen register (constant dynamics, output the
initial value); post-composing with it decapitates a Mealy machine onto
the soft Moore machines.  ``embed_j`` and ``apply_D1`` are the two
concrete conversion functors from Moore to Mealy machines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .compose import ltimes
from .core import (
    Alphabet,
    EnumerationTooLarge,
    Letter,
    LetterOutOfAlphabet,
    Machine,
    MealyMachine,
    MooreMachine,
    State,
)

ENUMERATION_GUARD = 10**7


def universal_u(x: Alphabet) -> MooreMachine:
    """The one-step delay register over x: the state becomes the last
    input letter, and the output is the current state."""
    states = x.symbols
    delta = {(e, a): a for e in states for a in states}
    out = {e: e for e in states}
    return MooreMachine(x, x, states, delta, out)


def universal_p(x: Alphabet) -> MooreMachine:
    """The frozen register over x: the dynamics fixes the state and the
    output is the state, so every trace is constant.

    The carrier is the symbol set itself, identifying each state with
    the function that answers it on the empty word and agrees with
    ``head`` everywhere else; ``pinfty_carrier_check`` validates that
    identification by enumeration.
    """
    states = x.symbols
    delta = {(e, a): e for e in states for a in states}
    out = {e: e for e in states}
    return MooreMachine(x, x, states, delta, out)


def pinfty_carrier_check(x: Alphabet, depth: int) -> int:
    """Count the functions from words of length ≤ depth to x that agree
    with ``head`` on every nonempty word.  The count must equal |x|: the
    only freedom is the value on the empty word."""
    from .semantics import words_up_to

    if depth < 1:
        raise ValueError("depth must be ≥ 1")
    words = words_up_to(x, depth)
    if len(x) ** len(words) > ENUMERATION_GUARD:
        raise EnumerationTooLarge(
            "%d^%d candidate functions exceed the guard" % (len(x), len(words))
        )
    count = 0
    for values in itertools.product(x.symbols, repeat=len(words)):
        f = dict(zip(words, values))
        if all(f[w] == w[0] for w in words if w):
            count += 1
    return count


def embed_j(m: MooreMachine) -> MealyMachine:
    """D₀: view a Moore machine as a Mealy machine whose output ignores
    the current letter."""
    out = {(e, a): m.out[e] for e in m.states for a in m.input.symbols}
    return MealyMachine(m.input, m.output, m.states, dict(m.delta), out)


def apply_D1(m: MooreMachine) -> MealyMachine:
    """D₁: same states and dynamics, but the output anticipates one step,
    out'(e, a) = out(delta(e, a))."""
    out = {(e, a): m.out[m.delta[(e, a)]] for e in m.states for a in m.input.symbols}
    return MealyMachine(m.input, m.output, m.states, dict(m.delta), out)


def d_iter(m: Machine, e: State, word: Iterable[Letter]) -> State:
    """The left-to-right fold of the dynamics over a word; the empty
    word is the identity on states."""
    for a in word:
        if a not in m.input:
            raise LetterOutOfAlphabet("letter %r is not in the input alphabet" % (a,))
        e = m.delta[(e, a)]
    return e


def moorify(m: MealyMachine) -> MooreMachine:
    """Buffer a Mealy machine's output by one step: post-composition
    with the universal one-step register over the output alphabet."""
    return ltimes(universal_u(m.output), m)


def decapitate(m: MealyMachine) -> MooreMachine:
    """Freeze a Mealy machine's output at its initial value:
    post-composition with the frozen register over the output alphabet.
    The result is always soft."""
    return ltimes(universal_p(m.output), m)


def is_soft(m: MooreMachine) -> bool:
    """True iff the output map is invariant under one transition step:
    out(delta(e, a)) = out(e) for all e, a."""
    return all(
        m.out[m.delta[(e, a)]] == m.out[e]
        for e in m.states
        for a in m.input.symbols
    )


def is_n_soft(m: MooreMachine, n: int) -> bool:
    """True iff the output map is invariant under n transition steps,
    for every word of length exactly n."""
    if n < 1:
        raise ValueError("n must be ≥ 1")
    for e in m.states:
        want = m.out[e]
        layer = {e}
        for _ in range(n):
            layer = {m.delta[(x, a)] for x in layer for a in m.input.symbols}
        if any(m.out[x] != want for x in layer):
            return False
    return True


@dataclass(frozen=True)
class SoftnessReport:
    """The least n ≥ 1 at which the machine is n-soft, if any within the
    checked bound."""

    machine: MooreMachine
    level: Optional[int]
    bound: int

    __hash__ = None


def softness_level(m: MooreMachine, bound: int) -> SoftnessReport:
    """Scan n = 1..bound for the least level at which m is n-soft."""
    if bound < 1:
        raise ValueError("bound must be ≥ 1")
    for n in range(1, bound + 1):
        if is_n_soft(m, n):
            return SoftnessReport(m, n, bound)
    return SoftnessReport(m, None, bound)
