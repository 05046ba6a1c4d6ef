"""Free unitization of the Moore composition structure.

The Moore machines compose associatively but admit no identity 1-cell;
here a formal identity ``FormalId(at)`` is freely adjoined at every
alphabet.  A ``UCell`` is either such a formal identity or an ordinary
Moore machine, composition collapses formal identities strictly, and
there are no 2-cells between a formal identity and a machine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .compose import associator, compose_moore
from .core import (
    Alphabet,
    EndpointMismatch,
    KindMismatch,
    MooreMachine,
    StateMap,
)


@dataclass(frozen=True)
class FormalId:
    """The formal identity cell at an alphabet; it carries no states."""

    at: Alphabet


UCell = Union[FormalId, MooreMachine]


def _endpoints(c: UCell):
    if isinstance(c, FormalId):
        return c.at.symbols, c.at.symbols
    return c.input.symbols, c.output.symbols


def ucompose(c2: UCell, c1: UCell) -> UCell:
    """Sequential composition in the unitized structure; formal
    identities are strict two-sided units."""
    in2, _ = _endpoints(c2)
    _, out1 = _endpoints(c1)
    if out1 != in2:
        raise EndpointMismatch("cells are not composable")
    if isinstance(c2, FormalId):
        return c1 if isinstance(c1, MooreMachine) else c2
    if isinstance(c1, FormalId):
        return c2
    return compose_moore(c2, c1)


@dataclass(frozen=True)
class UMap:
    """A 2-cell of the unitized structure: a StateMap between two
    machine cells, or the unique identity on a formal identity cell.
    No 2-cell relates a formal identity to a machine."""

    source: UCell
    target: UCell
    statemap: Optional[StateMap]

    def __post_init__(self):
        formal_src = isinstance(self.source, FormalId)
        formal_tgt = isinstance(self.target, FormalId)
        if formal_src != formal_tgt:
            raise KindMismatch("no 2-cell exists between a formal identity and a machine")
        if formal_src:
            if self.source != self.target:
                raise EndpointMismatch("formal identities only carry their own identity 2-cell")
            if self.statemap is not None:
                raise KindMismatch("the 2-cell on a formal identity carries no state map")
        else:
            if self.statemap is None:
                raise KindMismatch("a 2-cell between machines needs a state map")
            if self.statemap.source != self.source or self.statemap.target != self.target:
                raise EndpointMismatch("state map endpoints disagree with the cells")

    __hash__ = None

    @property
    def is_formal(self):
        return self.statemap is None


def formal_identity_map(at: Alphabet) -> UMap:
    return UMap(FormalId(at), FormalId(at), None)


def ucompose2(psi: UMap, phi: UMap) -> UMap:
    """Horizontal composition of 2-cells; identity tokens on formal
    identities act as strict units."""
    source = ucompose(psi.source, phi.source)
    target = ucompose(psi.target, phi.target)
    if psi.is_formal and phi.is_formal:
        return UMap(source, target, None)
    if phi.is_formal:
        return UMap(source, target, psi.statemap)
    if psi.is_formal:
        return UMap(source, target, phi.statemap)
    product = {
        (f, e): (psi.statemap.map[f], phi.statemap.map[e])
        for f in psi.source.states
        for e in phi.source.states
    }
    return UMap(source, target, StateMap(source, target, product))


def _ubeta(x: UCell, y: UCell, z: UCell):
    """The associator component x⋄(y⋄z) → (x⋄y)⋄z as a state function;
    whenever one argument is a formal identity, both brackets collapse
    to the same cell and the component is the identity."""
    # Composability check (raises EndpointMismatch if the chain breaks).
    ucompose(ucompose(x, y), z)
    if isinstance(x, FormalId) or isinstance(y, FormalId) or isinstance(z, FormalId):
        return lambda s: s
    return lambda s: ((s[0], s[1][0]), s[1][1])


def check_triangle(c2: UCell, c1: UCell) -> bool:
    """The triangle X⋄(⊥⋄Y) → (X⋄⊥)⋄Y → X⋄Y commutes: with strict
    units both legs are identities on the carrier of X⋄Y."""
    _, mid = _endpoints(c1)
    bottom = Alphabet("mid", mid)
    gap = FormalId(bottom)
    left = ucompose(c2, ucompose(gap, c1))
    right = ucompose(ucompose(c2, gap), c1)
    plain = ucompose(c2, c1)
    if left != plain or right != plain:
        return False
    alpha = _ubeta(c2, gap, c1)
    if isinstance(plain, FormalId):
        return True
    return all(alpha(s) == s for s in plain.states)


def check_upentagon(k: UCell, h: UCell, g: UCell, f: UCell) -> bool:
    """The pentagon for four unitized cells, with associator components
    involving formal identities reduced to identities."""
    source = ucompose(k, ucompose(h, ucompose(g, f)))
    if isinstance(source, FormalId):
        return True

    gf = ucompose(g, f)
    hg = ucompose(h, g)

    b_inner = _ubeta(h, g, f)
    b_outer_first = _ubeta(k, h, gf)
    b_outer_second = _ubeta(ucompose(k, h), g, f)
    b_mid = _ubeta(k, hg, f)
    b_last = _ubeta(k, h, g)

    # fn acts on the carrier of `acted`; `cell` is the untouched factor.
    # When either the untouched factor or the acted-on composite is a
    # formal identity the pair structure collapses and fn (then the
    # identity) must be applied to the bare state.
    def whisker_left(cell, acted, fn):
        if isinstance(acted, FormalId):
            return lambda s: s
        if isinstance(cell, FormalId):
            return fn
        return lambda s: (s[0], fn(s[1]))

    def whisker_right(cell, acted, fn):
        if isinstance(acted, FormalId):
            return lambda s: s
        if isinstance(cell, FormalId):
            return fn
        return lambda s: (fn(s[0]), s[1])

    def path_one(s):
        return b_outer_second(b_outer_first(s))

    def path_two(s):
        s = whisker_left(k, ucompose(h, gf), b_inner)(s)
        s = b_mid(s)
        return whisker_right(f, ucompose(k, hg), b_last)(s)

    return all(path_one(s) == path_two(s) for s in source.states)
