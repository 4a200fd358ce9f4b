"""Word-level operations: parsing, shifts, canonical forms, syllables."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from lorenzknots import InvalidWordError, Word, compare
from lorenzknots.oracles import aperiodic_words


def _rotations(s: str) -> list[str]:
    return [s[m:] + s[:m] for m in range(len(s))]


def _brute_l_maximal(s: str) -> tuple[str, int]:
    best = max((m for m in range(len(s)) if s[m] == "L"),
               key=lambda m: s[m:] + s[:m])
    return s[best:] + s[:best], best


def _brute_r_minimal(s: str) -> tuple[str, int]:
    best = min((m for m in range(len(s)) if s[m] == "R"),
               key=lambda m: s[m:] + s[:m])
    return s[best:] + s[:best], best


words_text = st.text(alphabet="LR", min_size=2, max_size=24).filter(
    lambda s: "L" in s and "R" in s)


class TestParsing:
    def test_lowercase_accepted(self):
        assert Word.parse("lrrlr") == Word("LRRLR")

    def test_bad_character_position(self):
        with pytest.raises(InvalidWordError, match=r"'X' at position 3"):
            Word.parse("LRXLR")

    def test_leading_bad_character(self):
        with pytest.raises(InvalidWordError, match=r"position 1"):
            Word.parse("0LR")

    def test_too_short(self):
        with pytest.raises(InvalidWordError):
            Word("L")

    def test_single_symbol_rejected(self):
        with pytest.raises(InvalidWordError, match="both L and R"):
            Word("LLLL")

    def test_lowercase_direct_construction_rejected(self):
        with pytest.raises(InvalidWordError):
            Word("lr")

    def test_length_cap(self, monkeypatch):
        from lorenzknots import words

        monkeypatch.setattr(words, "MAX_LENGTH", 8)
        with pytest.raises(InvalidWordError, match="cap"):
            Word("LR" * 5)
        assert Word("LR" * 4).n_l == 4


class TestShift:
    @pytest.mark.parametrize(
        "word, j, expected",
        [
            ("LRRLR", 1, "RRLRL"),
            ("LRRLR", 0, "LRRLR"),
            ("LRRLR", -1, "RLRRL"),
            ("LRRLR", 5, "LRRLR"),
        ],
    )
    def test_examples(self, word, j, expected):
        assert Word(word).shift(j) == Word(expected)

    @given(words_text, st.integers(-50, 50), st.integers(-50, 50))
    def test_additive(self, s, a, b):
        w = Word(s)
        assert w.shift(a).shift(b) == w.shift(a + b)

    def test_orbit_distinct_for_aperiodic(self):
        for n in range(2, 13):
            for w in aperiodic_words(n):
                assert len(set(w.orbit())) == n


class TestCompare:
    @pytest.mark.parametrize(
        "u, v, expected",
        [
            ("LRLRR", "LRRLR", -1),
            ("RLRLR", "RLRRL", -1),
            ("LRRLR", "LRRLR", 0),
            ("RLRLR", "LRLRR", 1),
        ],
    )
    def test_examples(self, u, v, expected):
        assert compare(Word(u), Word(v)) == expected

    def test_different_lengths_with_difference(self):
        assert compare(Word("LRL"), Word("LRRLR")) == -1

    def test_proper_prefix_raises(self):
        with pytest.raises(InvalidWordError, match="prefix"):
            compare(Word("LR"), Word("LRL"))

    def test_ordering_dunders(self):
        assert Word("LRLRR") < Word("LRRLR")
        assert Word("RRLRL") > Word("RLRRL")
        assert Word("LR") <= Word("LR")


class TestAperiodicity:
    @pytest.mark.parametrize(
        "word, expected",
        [
            ("LRRLR", True),
            ("LRLR", False),
            ("LRRLRLRRLRLR", True),
            ("LRRLRR", False),
            ("LR", True),
        ],
    )
    def test_examples(self, word, expected):
        assert Word(word).is_aperiodic() is expected

    def test_matches_direct_repetition_check(self):
        for n in range(2, 13):
            for bits in range(2**n):
                s = "".join("LR"[(bits >> i) & 1] for i in range(n))
                if "L" not in s or "R" not in s:
                    continue
                brute = not any(
                    s == s[:d] * (n // d) for d in range(1, n) if n % d == 0)
                assert Word(s).is_aperiodic() is brute


class TestCanonicalForms:
    @pytest.mark.parametrize(
        "word, expected, position",
        [
            ("RRLRL", "LRRLR", 4),
            ("LRRLR", "LRRLR", 0),
            # Brute-force derived: the L-started rotations of RLRLR are
            # s^1 = LRLRR and s^3 = LRRLR, so the maximal position is 3.
            ("RLRLR", "LRRLR", 3),
        ],
    )
    def test_l_maximal(self, word, expected, position):
        assert _brute_l_maximal(word) == (expected, position)
        assert Word(word).l_maximal() == (Word(expected), position)

    @pytest.mark.parametrize(
        "word, expected, position",
        [
            ("LRRLR", "RLRLR", 2),
            # Brute-force derived: sorted R-started rotations of LRRLRLR
            # begin with RLRLRLR at offset 2.
            ("LRRLRLR", "RLRLRLR", 2),
            ("RLRLR", "RLRLR", 0),
        ],
    )
    def test_r_minimal(self, word, expected, position):
        assert _brute_r_minimal(word) == (expected, position)
        assert Word(word).r_minimal() == (Word(expected), position)

    def test_periodic_input_rejected(self):
        with pytest.raises(InvalidWordError, match="periodic"):
            Word("LRLR").l_maximal()
        with pytest.raises(InvalidWordError, match="periodic"):
            Word("LRLR").r_minimal()

    def test_matches_brute_force(self):
        for n in range(2, 11):
            for w in aperiodic_words(n):
                bs, bm = _brute_l_maximal(w.symbols)
                assert w.l_maximal() == (Word(bs), bm)
                bs, bm = _brute_r_minimal(w.symbols)
                assert w.r_minimal() == (Word(bs), bm)

    @given(words_text)
    def test_canonical_forms_idempotent(self, s):
        w = Word(s)
        if not w.is_aperiodic():
            return
        lmax, _ = w.l_maximal()
        assert lmax.l_maximal() == (lmax, 0)
        rmin, _ = w.r_minimal()
        assert rmin.r_minimal() == (rmin, 0)


class TestSortedOrbit:
    def test_paper_example(self):
        orbit = Word("LRRLR").sorted_orbit()
        assert [str(w) for w in orbit.l_words] == ["LRLRR", "LRRLR"]
        assert [str(w) for w in orbit.r_words] == ["RLRLR", "RLRRL", "RRLRL"]
        assert orbit.shift_index[Word("LRRLR")] == 0
        assert orbit.shift_index[Word("RLRLR")] == 2

    def test_lrlrl(self):
        # Brute-force derived: rotations of LRLRL sorted.
        orbit = Word("LRLRL").sorted_orbit()
        assert [str(w) for w in orbit.l_words] == ["LLRLR", "LRLLR", "LRLRL"]
        assert [str(w) for w in orbit.r_words] == ["RLLRL", "RLRLL"]

    def test_two_symbols(self):
        orbit = Word("LR").sorted_orbit()
        assert [str(w) for w in orbit.l_words] == ["LR"]
        assert [str(w) for w in orbit.r_words] == ["RL"]

    def test_partition_and_sorting(self):
        for n in range(2, 11):
            for w in aperiodic_words(n):
                orbit = w.sorted_orbit()
                everything = list(orbit.l_words) + list(orbit.r_words)
                assert sorted(str(x) for x in everything) == sorted(_rotations(w.symbols))
                assert all(a < b for a, b in zip(orbit.l_words, orbit.l_words[1:]))
                assert all(a < b for a, b in zip(orbit.r_words, orbit.r_words[1:]))
                for rot, offset in orbit.shift_index.items():
                    assert w.shift(offset) == rot


class TestSyllables:
    @pytest.mark.parametrize(
        "word, expected",
        [
            ("LRRLR", ((1, 2), (1, 1))),
            ("LRRLRRLRLRLR", ((1, 2), (1, 2), (1, 1), (1, 1), (1, 1))),
            ("LRRRRLLR", ((1, 4), (2, 1))),
        ],
    )
    def test_examples(self, word, expected):
        assert Word(word).syllables() == expected

    @pytest.mark.parametrize(
        "word, expected",
        [("LRRLR", 2), ("LRRLRLR", 3), ("LRRLRRLRLRLR", 5)],
    )
    def test_trip_number_examples(self, word, expected):
        assert Word(word).trip_number() == expected

    def test_syllable_invariants(self):
        for n in range(2, 13):
            for w in aperiodic_words(n):
                sylls = w.syllables()
                assert sum(a + b for a, b in sylls) == n
                assert len(sylls) == w.trip_number()
                assert all(a >= 1 and b >= 1 for a, b in sylls)

    def test_concatenation_reproduces_l_maximal_without_ll_wrap(self):
        for n in range(2, 12):
            for w in aperiodic_words(n):
                lmax, _ = w.l_maximal()
                rebuilt = "".join("L" * a + "R" * b for a, b in w.syllables())
                if lmax.symbols.endswith("R"):
                    assert rebuilt == lmax.symbols
                else:
                    assert Word(rebuilt) in lmax.orbit()


class TestShiftOrderPreservation:
    def test_same_leading_symbol_rotations(self):
        # For two L-started rotations u < v of one orbit whose successors
        # start with the same symbol, the successors stay ordered (and
        # likewise for R-started rotations).
        for n in range(2, 13):
            for w in aperiodic_words(n):
                orbit = w.sorted_orbit()
                for group in (orbit.l_words, orbit.r_words):
                    for u, v in zip(group, group[1:]):
                        su, sv = u.shift(), v.shift()
                        if su.symbols[0] == sv.symbols[0]:
                            assert su < sv
