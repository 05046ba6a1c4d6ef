"""Sequential composition of machines.

The composite of ``first : A↝B`` followed by ``second : B↝C`` has
carrier the ordered pairs ``(f, e)`` with ``f`` a state of the second
machine and ``e`` a state of the first; the downstream machine consumes
the upstream machine's output letter at each step.  Whenever one factor
is Moore, the composite output table is letter-independent and the
result is returned as a MooreMachine (``ltimes`` / ``rtimes``).

Composition is associative only up to the re-bracketing bijection
returned by ``associator``; ``check_pentagon`` verifies the coherence of
that bijection as a literal function equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EndpointMismatch,
    KindMismatch,
    Machine,
    MealyMachine,
    MooreMachine,
    StateMap,
    is_homomorphism,
)


def _require_chain(second, first):
    if first.output.symbols != second.input.symbols:
        raise EndpointMismatch(
            "output alphabet %r does not match input alphabet %r"
            % (first.output.symbols, second.input.symbols)
        )


def _pair_states(second, first):
    return tuple((f, e) for f in second.states for e in first.states)


def compose_mealy(second: MealyMachine, first: MealyMachine) -> MealyMachine:
    """Cascade of two Mealy machines: out((f,e),a) = out₂(f, out₁(e,a))."""
    _require_chain(second, first)
    states = _pair_states(second, first)
    delta, out = {}, {}
    for f, e in states:
        for a in first.input.symbols:
            b = first.out[(e, a)]
            delta[((f, e), a)] = (second.delta[(f, b)], first.delta[(e, a)])
            out[((f, e), a)] = second.out[(f, b)]
    return MealyMachine(first.input, second.output, states, delta, out)


def compose_moore(second: MooreMachine, first: MooreMachine) -> MooreMachine:
    """Cascade of two Moore machines: the downstream machine reads the
    upstream machine's current output, and the composite emits out₂(f)."""
    _require_chain(second, first)
    states = _pair_states(second, first)
    delta = {}
    for f, e in states:
        b = first.out[e]
        for a in first.input.symbols:
            delta[((f, e), a)] = (second.delta[(f, b)], first.delta[(e, a)])
    out = {(f, e): second.out[f] for f, e in states}
    return MooreMachine(first.input, second.output, states, delta, out)


def ltimes(n: MooreMachine, m: MealyMachine) -> MooreMachine:
    """Moore-after-Mealy composite n⋄m; Moore overrides Mealy, so the
    result is a Moore machine outputting out_n(f)."""
    if not isinstance(n, MooreMachine) or not isinstance(m, MealyMachine):
        raise KindMismatch("ltimes takes a Moore machine after a Mealy machine")
    _require_chain(n, m)
    states = _pair_states(n, m)
    delta = {}
    for f, e in states:
        for a in m.input.symbols:
            delta[((f, e), a)] = (n.delta[(f, m.out[(e, a)])], m.delta[(e, a)])
    out = {(f, e): n.out[f] for f, e in states}
    return MooreMachine(m.input, n.output, states, delta, out)


def rtimes(m: MealyMachine, n: MooreMachine) -> MooreMachine:
    """Mealy-after-Moore composite m⋄n; the output out_m(e, out_n(f)) is
    letter-independent, so the result is again a Moore machine."""
    if not isinstance(m, MealyMachine) or not isinstance(n, MooreMachine):
        raise KindMismatch("rtimes takes a Mealy machine after a Moore machine")
    _require_chain(m, n)
    states = _pair_states(m, n)
    delta = {}
    for e, f in states:
        b = n.out[f]
        for a in n.input.symbols:
            delta[((e, f), a)] = (m.delta[(e, b)], n.delta[(f, a)])
    out = {(e, f): m.out[(e, n.out[f])] for e, f in states}
    return MooreMachine(n.input, m.output, states, delta, out)


def compose_cells(second: Machine, first: Machine) -> Machine:
    """Kind-dispatching sequential composition of two cells."""
    if isinstance(second, MooreMachine):
        if isinstance(first, MooreMachine):
            return compose_moore(second, first)
        return ltimes(second, first)
    if isinstance(first, MooreMachine):
        return rtimes(second, first)
    return compose_mealy(second, first)


@dataclass(frozen=True)
class StateBijection:
    """A machine isomorphism: a homomorphism with a homomorphic inverse."""

    source: Machine
    target: Machine
    forward: StateMap
    backward: StateMap

    def __post_init__(self):
        for e in self.source.states:
            if self.backward.map[self.forward.map[e]] != e:
                raise NotAnIso("backward∘forward is not the identity at %r" % (e,))
        for f in self.target.states:
            if self.forward.map[self.backward.map[f]] != f:
                raise NotAnIso("forward∘backward is not the identity at %r" % (f,))
        if not is_homomorphism(self.forward) or not is_homomorphism(self.backward):
            raise NotAnIso("both directions must be homomorphisms")

    __hash__ = None


class NotAnIso(KindMismatch):
    """The candidate bijection fails to be a two-sided machine isomorphism."""


def associator(h: Machine, g: Machine, f: Machine) -> StateBijection:
    """The re-bracketing bijection (h⋄g)⋄f ≅ h⋄(g⋄f).

    Forward direction: ((eh,eg),ef) ↦ (eh,(eg,ef)).
    """
    left = compose_cells(compose_cells(h, g), f)
    right = compose_cells(h, compose_cells(g, f))
    fwd = {((eh, eg), ef): (eh, (eg, ef)) for eh in h.states for eg in g.states for ef in f.states}
    bwd = {v: k for k, v in fwd.items()}
    return StateBijection(
        left, right, StateMap(left, right, fwd), StateMap(right, left, bwd)
    )


def check_pentagon(k: Machine, h: Machine, g: Machine, f: Machine) -> bool:
    """Compare the two re-bracketing paths k⋄(h⋄(g⋄f)) → ((k⋄h)⋄g)⋄f
    as functions on the 4-fold product carrier."""
    # All compositions below only exist if the chain of endpoints matches.
    compose_cells(compose_cells(compose_cells(k, h), g), f)

    def beta(s):  # x⋄(y⋄z) → (x⋄y)⋄z
        x, (y, z) = s
        return ((x, y), z)

    def path_one(s):
        return beta(beta(s))

    def path_two(s):
        ek, rest = s
        s = (ek, beta(rest))
        s = beta(s)
        y, ef = s
        return (beta(y), ef)

    for ek in k.states:
        for eh in h.states:
            for eg in g.states:
                for ef in f.states:
                    s = (ek, (eh, (eg, ef)))
                    if path_one(s) != path_two(s):
                        return False
    return True


def check_j_compatibilities(m: Machine, n: Machine) -> bool:
    """Strict table equalities relating the Moore→Mealy embedding J with
    composition, in the composite m⋄n (m downstream, n upstream):

    - m Mealy, n Moore:  J(m⋄n) = m⋄Jn
    - m Moore, n Mealy:  J(m⋄n) = Jm⋄n
    - m, n both Moore:   m⋄Jn = Jm⋄n  and  J(m⋄n) = Jm⋄Jn
    """
    from .universal import embed_j

    if isinstance(m, MealyMachine) and isinstance(n, MooreMachine):
        return embed_j(rtimes(m, n)) == compose_mealy(m, embed_j(n))
    if isinstance(m, MooreMachine) and isinstance(n, MealyMachine):
        return embed_j(ltimes(m, n)) == compose_mealy(embed_j(m), n)
    if isinstance(m, MooreMachine) and isinstance(n, MooreMachine):
        return (
            ltimes(m, embed_j(n)) == rtimes(embed_j(m), n)
            and embed_j(compose_moore(m, n)) == compose_mealy(embed_j(m), embed_j(n))
        )
    raise KindMismatch("no J-compatibility applies to two Mealy machines")
