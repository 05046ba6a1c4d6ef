import itertools

import pytest

from mealymoore import (
    Alphabet,
    EmptyWordOnMealy,
    EndpointMismatch,
    KindMismatch,
    LetterOutOfAlphabet,
    MooreMachine,
    PointedMachine,
    UnknownSymbol,
    apply_D1,
    bisimilar,
    check_extension_square,
    compose_mealy,
    identity_cell,
    run,
    trace,
    words_up_to,
)

from oracles import fold_run, fold_trace, words_agree


class TestRun:
    def test_moore_parity(self, cpar):
        assert run(PointedMachine(cpar, "q0"), ("1", "0", "1")) == "0"

    def test_mealy_parity(self, par):
        assert run(PointedMachine(par, "q0"), ("1", "0", "1")) == "0"

    def test_moore_empty_word(self, cpar):
        assert run(PointedMachine(cpar, "q0"), ()) == "0"

    def test_mealy_empty_word_rejected(self, par):
        with pytest.raises(EmptyWordOnMealy):
            run(PointedMachine(par, "q0"), ())

    def test_letter_out_of_alphabet(self, par):
        with pytest.raises(LetterOutOfAlphabet):
            run(PointedMachine(par, "q0"), ("2",))

    def test_unknown_start_state(self, par):
        with pytest.raises(UnknownSymbol):
            PointedMachine(par, "nope")

    def test_agrees_with_fold_oracle(self, par, cpar):
        for m, start in [(par, "q0"), (par, "q1"), (cpar, "q0")]:
            for w in words_up_to(m.input, 4, include_empty=False):
                assert run(PointedMachine(m, start), w) == fold_run(m, start, w)


class TestTrace:
    def test_mealy_trace(self, par):
        assert trace(PointedMachine(par, "q0"), ("1", "0", "1")) == ("1", "1", "0")

    def test_moore_trace(self, cpar):
        assert trace(PointedMachine(cpar, "q0"), ("1", "0", "1")) == ("0", "1", "1", "0")

    def test_moore_empty_trace(self, cpar):
        assert trace(PointedMachine(cpar, "q1"), ()) == ("1",)

    def test_length_law(self, par, cpar):
        for w in words_up_to(par.input, 4):
            assert len(trace(PointedMachine(par, "q0"), w)) == len(w)
            assert len(trace(PointedMachine(cpar, "q0"), w)) == len(w) + 1

    def test_prefix_coherence(self, par, cpar):
        for m, start in [(par, "q0"), (cpar, "q0")]:
            p = PointedMachine(m, start)
            for w in words_up_to(m.input, 3):
                base = trace(p, w)
                for a in m.input.symbols:
                    extended = trace(p, w + (a,))
                    assert extended[: len(base)] == base
                    assert len(extended) == len(base) + 1

    def test_agrees_with_per_prefix_oracle(self, par, cpar):
        for m in (par, cpar):
            for w in words_up_to(m.input, 4):
                assert trace(PointedMachine(m, "q0"), w) == fold_trace(m, "q0", w)


class TestBisimilar:
    def test_reflexive(self, par):
        assert bisimilar(PointedMachine(par, "q0"), PointedMachine(par, "q0"))

    def test_distinct_states_differ(self, par):
        assert not bisimilar(PointedMachine(par, "q0"), PointedMachine(par, "q1"))

    def test_identity_composition(self, par, bits):
        cc = compose_mealy(identity_cell(bits), par)
        assert bisimilar(PointedMachine(cc, ("*", "q0")), PointedMachine(par, "q0"))

    def test_kind_mismatch(self, par, cpar):
        with pytest.raises(KindMismatch):
            bisimilar(PointedMachine(par, "q0"), PointedMachine(cpar, "q0"))

    def test_endpoint_mismatch(self, par):
        three = Alphabet("three", ("0", "1", "2"))
        with pytest.raises(EndpointMismatch):
            bisimilar(PointedMachine(par, "q0"), PointedMachine(identity_cell(three), "*"))

    def test_equivalence_relation_on_samples(self, par, bits):
        cc = compose_mealy(identity_cell(bits), par)
        points = [PointedMachine(par, "q0"), PointedMachine(par, "q1"),
                  PointedMachine(cc, ("*", "q0")), PointedMachine(cc, ("*", "q1"))]
        for p, q in itertools.product(points, repeat=2):
            assert bisimilar(p, q) == bisimilar(q, p)
        for p, q, r in itertools.product(points, repeat=3):
            if bisimilar(p, q) and bisimilar(q, r):
                assert bisimilar(p, r)

    def test_matches_bounded_word_exhaustion(self, par, cpar, u2, bits):
        mealys = [(par, s) for s in par.states]
        mealys += [(compose_mealy(par, par), s) for s in compose_mealy(par, par).states]
        for (m1, s1), (m2, s2) in itertools.product(mealys, repeat=2):
            assert bisimilar(
                PointedMachine(m1, s1), PointedMachine(m2, s2)
            ) == words_agree(m1, s1, m2, s2, 6)
        moores = [(cpar, s) for s in cpar.states] + [(u2, s) for s in u2.states]
        for (m1, s1), (m2, s2) in itertools.product(moores, repeat=2):
            assert bisimilar(
                PointedMachine(m1, s1), PointedMachine(m2, s2)
            ) == words_agree(m1, s1, m2, s2, 6)


class TestExtensionSquare:
    def test_cpar(self, cpar):
        assert check_extension_square(cpar, 6)

    def test_u2(self, u2):
        assert check_extension_square(u2, 6)

    def test_one_state(self):
        one = Alphabet("one", ("a",))
        m = MooreMachine(one, one, ("s",), {("s", "a"): "s"}, {"s": "a"})
        assert check_extension_square(m, 6)

    def test_matches_literal_run_comparison(self, cpar, u2, p2):
        # Dual route: compare run() on every nonempty word directly.
        for m in (cpar, u2, p2):
            d1 = apply_D1(m)
            for e in m.states:
                for w in words_up_to(m.input, 4, include_empty=False):
                    assert run(PointedMachine(m, e), w) == run(PointedMachine(d1, e), w)
            assert check_extension_square(m, 4)
