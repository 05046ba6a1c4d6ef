"""Brute-force homomorphism enumeration and desk-scale law checking.

Every claim checked here is decided by complete enumeration: all total
state maps between two machines are tested against the homomorphism
predicate, and the adjunction / coreflection transposition formulas are
verified as literal bijections between the resulting hom-sets.  A hard
candidate-count guard keeps enumerations honest: either the sweep is
complete or it raises, never silently truncated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .compose import ltimes, rtimes
from .core import (
    Alphabet,
    EndpointMismatch,
    EnumerationTooLarge,
    KindMismatch,
    Machine,
    MealyMachine,
    MooreMachine,
    NotAHomomorphism,
    NotSoft,
    StateMap,
    _is_hom_tables,
    is_homomorphism,
)
from .generate import all_moore_up_to, count_moore
from .semantics import PointedMachine, bisimilar
from .universal import apply_D1, decapitate, embed_j, is_soft, moorify

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class HomSet:
    """The complete, duplicate-free, lexicographically ordered set of
    homomorphisms between two machines."""

    source: Machine
    target: Machine
    homs: tuple[StateMap, ...]

    __hash__ = None

    def maps(self):
        return [phi.map for phi in self.homs]


def enumerate_homs(m1: Machine, m2: Machine) -> HomSet:
    """Test every total state map m1 → m2 and keep the homomorphisms,
    in lexicographic order of target-state indices."""
    if type(m1) is not type(m2):
        raise KindMismatch("hom-sets relate machines of the same kind")
    if m1.input.symbols != m2.input.symbols or m1.output.symbols != m2.output.symbols:
        raise EndpointMismatch("hom-sets require common alphabets")
    n_candidates = len(m2.states) ** len(m1.states)
    if n_candidates > ENUMERATION_GUARD:
        raise EnumerationTooLarge("%d candidate maps exceed the guard" % n_candidates)
    homs = []
    source_states = m1.states
    for images in itertools.product(m2.states, repeat=len(source_states)):
        mapping = dict(zip(source_states, images))
        if _is_hom_tables(m1, m2, mapping):
            homs.append(StateMap(m1, m2, mapping))
    return HomSet(m1, m2, tuple(homs))


@dataclass(frozen=True)
class BijectionReport:
    """The outcome of attempting a transposition bijection between two
    hom-sets; on failure, ``counterexample`` names the first offending
    element."""

    left: HomSet
    right: HomSet
    pairs: tuple[tuple[StateMap, StateMap], ...]
    success: bool
    counterexample: Optional[str]

    __hash__ = None


def _transpose_report(n, left, right):
    """Attempt φ ↦ (e ↦ (out_n(e), φ(e))) as a bijection left → right,
    with the inverse projecting the second component."""
    right_maps = right.maps()
    left_maps = left.maps()
    pairs = []
    for phi in left.homs:
        transposed = {e: (n.out[e], phi.map[e]) for e in n.states}
        if transposed not in right_maps:
            return BijectionReport(
                left, right, (), False,
                "transpose of %r is not in the right hom-set" % (phi.map,),
            )
        pairs.append((phi, right.homs[right_maps.index(transposed)]))
    for psi in right.homs:
        projected = {e: psi.map[e][1] for e in n.states}
        if projected not in left_maps:
            return BijectionReport(
                left, right, (), False,
                "projection of %r is not in the left hom-set" % (psi.map,),
            )
        back = {e: (n.out[e], projected[e]) for e in n.states}
        if back != psi.map:
            return BijectionReport(
                left, right, (), False,
                "round trip fails at %r" % (psi.map,),
            )
    if len(left.homs) != len(right.homs):
        return BijectionReport(left, right, (), False, "hom-set sizes differ")
    return BijectionReport(left, right, tuple(pairs), True, None)


def check_adjunction_D1(n: MooreMachine, m: MealyMachine) -> BijectionReport:
    """Verify, by complete enumeration, the natural bijection between
    Mealy homs apply_D1(n) → m and Moore homs n → moorify(m)."""
    left = enumerate_homs(apply_D1(n), m)
    right = enumerate_homs(n, moorify(m))
    return _transpose_report(n, left, right)


def check_hom_correspondence(n: MooreMachine, m: MealyMachine) -> BijectionReport:
    """Measure the analogous correspondence between Mealy homs
    embed_j(n) → m and Moore homs n → decapitate(m), for soft n.

    This is a measurement, not an assumed law: the report records
    whether the same transposition formula works here.
    """
    if not is_soft(n):
        raise NotSoft("the correspondence is only measured for soft machines")
    left = enumerate_homs(embed_j(n), m)
    right = enumerate_homs(n, decapitate(m))
    return _transpose_report(n, left, right)


def check_counit(m: MealyMachine) -> bool:
    """True iff projecting the buffered output component,
    (b, e) ↦ e, is a Mealy homomorphism apply_D1(moorify(m)) → m."""
    src = apply_D1(moorify(m))
    proj = StateMap(src, m, {s: s[1] for s in src.states})
    return is_homomorphism(proj)


def check_moorify_functorial(phi: StateMap) -> bool:
    """True iff (b, e) ↦ (b, φ(e)) is a Moore homomorphism between the
    moorifications of φ's endpoints."""
    if not is_homomorphism(phi):
        raise NotAHomomorphism("moorify is only functorial on homomorphisms")
    src = moorify(phi.source)
    tgt = moorify(phi.target)
    lifted = StateMap(src, tgt, {(b, e): (b, phi.map[e]) for b, e in src.states})
    return is_homomorphism(lifted)


@dataclass(frozen=True)
class IdentitySearchReport:
    """Outcome of the exhaustive search for a Moore identity 1-cell."""

    alphabet: Alphabet
    max_states: int
    candidates_checked: int
    survivors: tuple[MooreMachine, ...]
    # (candidate index, probe index, direction) of each first failure
    failures: tuple[tuple[int, int, str], ...]
    probe_warning: Optional[str]

    __hash__ = None


def _pointwise_identity(candidate, probe, composite, side):
    """Does the composite behave like the probe from every probe state,
    for some choice of candidate start state?"""
    j_composite = embed_j(composite)
    for e0 in probe.states:
        found = False
        for u0 in candidate.states:
            start = (u0, e0) if side == "left" else (e0, u0)
            if bisimilar(
                PointedMachine(j_composite, start), PointedMachine(probe, e0)
            ):
                found = True
                break
        if not found:
            return False
    return True


def search_moore_identity(
    a: Alphabet, probes: list[MealyMachine], max_states: int
) -> IdentitySearchReport:
    """Enumerate every Moore machine U : a↝a with ≤ max_states states
    and test whether U⋄m and m⋄U are bisimilar to m pointwise for every
    probe m.  The survivor list is expected to be empty whenever some
    probe has a letter-dependent output table."""
    total = sum(count_moore(a, a, k) for k in range(1, max_states + 1))
    if total > ENUMERATION_GUARD:
        raise EnumerationTooLarge("%d candidate machines exceed the guard" % total)
    survivors = []
    failures = []
    checked = 0
    for idx, candidate in enumerate(all_moore_up_to(a, a, max_states)):
        checked += 1
        failed = None
        for p_idx, probe in enumerate(probes):
            if not _pointwise_identity(candidate, probe, ltimes(candidate, probe), "left"):
                failed = (idx, p_idx, "post-composition")
                break
            if not _pointwise_identity(candidate, probe, rtimes(probe, candidate), "right"):
                failed = (idx, p_idx, "pre-composition")
                break
        if failed is None:
            survivors.append(candidate)
        else:
            failures.append(failed)
    warning = None
    if survivors and not any(
        len({m.out[(e, x)] for x in m.input.symbols}) > 1
        for m in probes
        for e in m.states
    ):
        warning = (
            "all probes have letter-independent output rows; add a probe "
            "with letter-dependent output to rule the survivors out"
        )
    return IdentitySearchReport(
        a, max_states, checked, tuple(survivors), tuple(failures), warning
    )
