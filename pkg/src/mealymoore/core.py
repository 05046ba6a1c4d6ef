"""Finite Mealy and Moore machines over named alphabets.

A machine is a total transition table ``delta`` over (state, letter)
together with an output table ``out``: letter-dependent for Mealy
machines, letter-independent for Moore machines.  State maps between
machines with common endpoints are candidate 2-cells; the homomorphism
predicate checks equivariance and output preservation.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

State = Union[str, tuple]
Letter = str


class MachineError(ValueError):
    """Base class for all machine construction and law-check errors."""


class DuplicateName(MachineError):
    """A state or symbol name is declared more than once."""


class MissingEntry(MachineError):
    """A table lacks an entry for some (state, letter) pair, or has the wrong shape."""


class UnknownSymbol(MachineError):
    """A table entry references an undeclared state or letter."""


class EndpointMismatch(MachineError):
    """Two machines or maps do not share the required alphabets."""


class KindMismatch(MachineError):
    """A Mealy machine appears where a Moore machine is required, or vice versa."""


class EmptyWordOnMealy(MachineError):
    """Mealy machines have no output on the empty word."""


class LetterOutOfAlphabet(MachineError):
    """A word contains a letter not in the machine's input alphabet."""


class EnumerationTooLarge(MachineError):
    """An exhaustive enumeration would exceed the hard candidate guard."""


class NotSoft(MachineError):
    """The operation requires a soft Moore machine."""


class NotAHomomorphism(MachineError):
    """The operation requires a state map that is a homomorphism."""


@dataclass(frozen=True)
class Alphabet:
    """A named finite set of symbols; the name is a label and does not
    participate in equality.  Symbol order is fixed at construction and
    used for all iteration."""

    name: str = field(compare=False)
    symbols: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.symbols) < 1:
            raise MachineError("alphabet %r must have at least one symbol" % self.name)
        if len(set(self.symbols)) != len(self.symbols):
            raise DuplicateName("alphabet %r has repeated symbols" % self.name)

    def __contains__(self, letter):
        return letter in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)


def _check_states(states):
    states = tuple(states)
    if len(states) < 1:
        raise MachineError("a machine needs at least one state")
    if len(set(states)) != len(states):
        raise DuplicateName("repeated state names")
    return states


def _check_delta(states, alphabet, delta):
    stateset = set(states)
    expected = {(e, a) for e in states for a in alphabet.symbols}
    keys = set(delta)
    if keys - expected:
        raise UnknownSymbol("delta entry for undeclared %r" % (next(iter(keys - expected)),))
    if expected - keys:
        raise MissingEntry("delta lacks entry for %r" % (next(iter(expected - keys)),))
    for target in delta.values():
        if target not in stateset:
            raise UnknownSymbol("delta target %r is not a declared state" % (target,))


@dataclass(frozen=True)
class MealyMachine:
    """A 1-cell A↝B with letter-dependent output out(e, a)."""

    input: Alphabet
    output: Alphabet
    states: tuple[State, ...]
    delta: Mapping[tuple[State, Letter], State]
    out: Mapping[tuple[State, Letter], Letter]

    def __post_init__(self):
        object.__setattr__(self, "states", _check_states(self.states))
        _check_delta(self.states, self.input, self.delta)
        expected = {(e, a) for e in self.states for a in self.input.symbols}
        keys = set(self.out)
        if keys - expected:
            raise UnknownSymbol("out entry for undeclared %r" % (next(iter(keys - expected)),))
        if expected - keys:
            raise MissingEntry("out lacks entry for %r" % (next(iter(expected - keys)),))
        for letter in self.out.values():
            if letter not in self.output:
                raise UnknownSymbol("output letter %r is not in the output alphabet" % (letter,))

    __hash__ = None


@dataclass(frozen=True)
class MooreMachine:
    """A 1-cell A↝B with letter-independent output out(e)."""

    input: Alphabet
    output: Alphabet
    states: tuple[State, ...]
    delta: Mapping[tuple[State, Letter], State]
    out: Mapping[State, Letter]

    def __post_init__(self):
        object.__setattr__(self, "states", _check_states(self.states))
        _check_delta(self.states, self.input, self.delta)
        expected = set(self.states)
        keys = set(self.out)
        if keys - expected:
            raise UnknownSymbol("out entry for undeclared state %r" % (next(iter(keys - expected)),))
        if expected - keys:
            raise MissingEntry("out lacks entry for state %r" % (next(iter(expected - keys)),))
        for letter in self.out.values():
            if letter not in self.output:
                raise UnknownSymbol("output letter %r is not in the output alphabet" % (letter,))

    __hash__ = None


Machine = Union[MealyMachine, MooreMachine]


def _raw_alphabet(name, symbols):
    if not isinstance(symbols, (list, tuple)):
        raise MissingEntry("%s alphabet must be a list of symbols" % name)
    return Alphabet(name, tuple(str(s) for s in symbols))


def _flatten_table(states, table, what):
    """Turn a nested {state: {letter: value}} table into (state, letter) keys."""
    if not isinstance(table, Mapping):
        raise MissingEntry("%s must be a table keyed by state" % what)
    flat = {}
    for e, row in table.items():
        if not isinstance(row, Mapping):
            raise MissingEntry("%s[%r] must be a per-letter table" % (what, e))
        for a, v in row.items():
            flat[(e, a)] = v
    return flat


def validate_mealy(raw: Mapping) -> MealyMachine:
    """Build a MealyMachine from a raw description (parsed machine file)."""
    inp = _raw_alphabet("input", raw.get("input"))
    outp = _raw_alphabet("output", raw.get("output"))
    states = raw.get("states")
    if not isinstance(states, (list, tuple)):
        raise MissingEntry("states must be a list")
    delta = _flatten_table(states, raw.get("delta", {}), "delta")
    out = _flatten_table(states, raw.get("out", {}), "out")
    return MealyMachine(inp, outp, tuple(states), delta, out)


def validate_moore(raw: Mapping) -> MooreMachine:
    """Build a MooreMachine from a raw description (parsed machine file)."""
    inp = _raw_alphabet("input", raw.get("input"))
    outp = _raw_alphabet("output", raw.get("output"))
    states = raw.get("states")
    if not isinstance(states, (list, tuple)):
        raise MissingEntry("states must be a list")
    delta = _flatten_table(states, raw.get("delta", {}), "delta")
    out = raw.get("out", {})
    if not isinstance(out, Mapping):
        raise MissingEntry("out must be a table keyed by state")
    for e, v in out.items():
        if isinstance(v, Mapping):
            raise MissingEntry("out[%r]: a Moore output table maps states to letters" % (e,))
    return MooreMachine(inp, outp, tuple(states), delta, dict(out))


def identity_cell(a: Alphabet) -> MealyMachine:
    """The one-state echo machine over input = output = a: the only
    identity 1-cell for sequential composition, and not of Moore type."""
    delta = {("*", x): "*" for x in a.symbols}
    out = {("*", x): x for x in a.symbols}
    return MealyMachine(a, a, ("*",), delta, out)


@dataclass(frozen=True)
class StateMap:
    """A candidate 2-cell: a total function between the state sets of
    two machines of the same kind with common endpoints."""

    source: Machine
    target: Machine
    map: Mapping[State, State]

    def __post_init__(self):
        if type(self.source) is not type(self.target):
            raise KindMismatch("state maps relate machines of the same kind")
        if (self.source.input.symbols != self.target.input.symbols
                or self.source.output.symbols != self.target.output.symbols):
            raise EndpointMismatch("state maps require common input and output alphabets")
        missing = set(self.source.states) - set(self.map)
        if missing:
            raise MissingEntry("map lacks entry for state %r" % (next(iter(missing)),))
        extra = set(self.map) - set(self.source.states)
        if extra:
            raise UnknownSymbol("map entry for undeclared state %r" % (next(iter(extra)),))
        targets = set(self.target.states)
        for image in self.map.values():
            if image not in targets:
                raise UnknownSymbol("map image %r is not a target state" % (image,))

    __hash__ = None


def _is_hom_tables(source, target, mapping) -> bool:
    """Homomorphism check on bare tables; assumes endpoints already agree."""
    mealy = isinstance(source, MealyMachine)
    for e in source.states:
        fe = mapping[e]
        if not mealy and target.out[fe] != source.out[e]:
            return False
        for a in source.input.symbols:
            if mapping[source.delta[(e, a)]] != target.delta[(fe, a)]:
                return False
            if mealy and target.out[(fe, a)] != source.out[(e, a)]:
                return False
    return True


def is_homomorphism(phi: StateMap) -> bool:
    """True iff phi commutes with the dynamics and preserves outputs."""
    return _is_hom_tables(phi.source, phi.target, phi.map)


def identity_map(m: Machine) -> StateMap:
    return StateMap(m, m, {e: e for e in m.states})


def compose_maps(psi: StateMap, phi: StateMap) -> StateMap:
    """Vertical composition psi∘phi of state maps."""
    if phi.target is not psi.source and phi.target != psi.source:
        raise EndpointMismatch("maps are not composable")
    return StateMap(phi.source, psi.target, {e: psi.map[phi.map[e]] for e in phi.source.states})
