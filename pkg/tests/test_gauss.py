import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gauss_words
from gmk import (
    CanonicalForm,
    ChordDiagram,
    GaussCode,
    canonicalize,
    delete_chord,
    enumerate_codes,
    interlacement_matrix,
    is_canonical,
    parse_gauss_code,
    smooth_chord,
    smoothed_crossings,
    symmetry_orbit_size,
    to_chord_diagram,
)
from gmk.errors import LimitExceeded, NotDoubleOccurrence, UnknownChord


class TestParsing:
    def test_compact(self):
        code = parse_gauss_code("abcabc")
        assert code.n == 3
        assert code.word == ("a", "b", "c", "a", "b", "c")

    def test_token_list(self):
        assert parse_gauss_code("1 2 1 2").word == ("1", "2", "1", "2")
        assert parse_gauss_code("1, 2, 1, 2").word == ("1", "2", "1", "2")
        assert parse_gauss_code(["x1", "x2", "x1", "x2"]).n == 2

    def test_not_double_occurrence(self):
        with pytest.raises(NotDoubleOccurrence):
            parse_gauss_code("aba")

    def test_empty(self):
        assert parse_gauss_code("").n == 0

    def test_json_round_trip(self):
        code = parse_gauss_code("abab")
        assert GaussCode.from_json(code.to_json()) == code


class TestChordDiagram:
    def test_interleaved(self):
        d = to_chord_diagram(parse_gauss_code("abab"))
        assert d.positions == {"a": (0, 2), "b": (1, 3)}
        assert d.crossing("a") == {"b"}

    def test_disjoint(self):
        d = to_chord_diagram(parse_gauss_code("aabb"))
        assert d.crossing("a") == frozenset()
        assert d.parallel("a") == {"a", "b"}

    def test_path_pattern(self):
        d = to_chord_diagram(parse_gauss_code("abacbc"))
        assert d.crossing("a") == {"b"}
        assert d.crossing("b") == {"a", "c"}
        assert d.crossing("c") == {"b"}

    def test_unknown_chord(self):
        d = to_chord_diagram(parse_gauss_code("abab"))
        with pytest.raises(UnknownChord):
            d.crossing("z")

    @given(gauss_words())
    def test_interlacement_symmetric(self, code):
        d = to_chord_diagram(code)
        for a, b in itertools.combinations(d.labels, 2):
            assert (b in d.crossing(a)) == (a in d.crossing(b))
            assert a not in d.crossing(a)


class TestInterlacementMatrix:
    @pytest.mark.parametrize(
        "code,expected",
        [
            ("abab", [[0, 1], [1, 0]]),
            ("abcabc", [[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
            ("abacbc", [[0, 1, 0], [1, 0, 1], [0, 1, 0]]),
        ],
    )
    def test_examples(self, code, expected):
        assert interlacement_matrix(parse_gauss_code(code)).to_lists() == expected

    @given(gauss_words())
    def test_symmetric_zero_diagonal(self, code):
        matrix = interlacement_matrix(code)
        lists = matrix.to_lists()
        for i in range(matrix.size):
            assert lists[i][i] == 0
            for j in range(matrix.size):
                assert lists[i][j] == lists[j][i]


class TestSmoothing:
    @pytest.mark.parametrize(
        "code,chord,expected",
        [
            ("abcabc", "a", "cbbc"),
            ("abab", "a", "bb"),
            ("abacbc", "b", "acac"),
        ],
    )
    def test_word_rewrite(self, code, chord, expected):
        d = to_chord_diagram(parse_gauss_code(code))
        assert str(smooth_chord(d, chord).code) == expected

    def test_toggle_makes_new_crossing(self):
        # a and c did not cross but both crossed b; after smoothing b they do
        d = to_chord_diagram(parse_gauss_code("abacbc"))
        result = smooth_chord(d, "b")
        assert result.crossing("a") == {"c"}
        assert smoothed_crossings(d, "b") == {
            "a": frozenset("c"),
            "c": frozenset("a"),
        }

    def test_unknown(self):
        with pytest.raises(UnknownChord):
            smooth_chord(to_chord_diagram(parse_gauss_code("abab")), "q")

    @given(gauss_words(min_chords=1))
    def test_rewrite_matches_toggle(self, code):
        d = to_chord_diagram(code)
        for label in d.labels:
            result = smooth_chord(d, label)
            assert result.n == d.n - 1
            assert result.crossings == smoothed_crossings(d, label)

    def test_exhaustive_rewrite_matches_toggle_small(self):
        for n in range(1, 6):
            for form in enumerate_codes(n):
                d = to_chord_diagram(form)
                for label in d.labels:
                    assert smooth_chord(d, label).crossings == smoothed_crossings(
                        d, label
                    )

    @given(gauss_words(min_chords=1))
    def test_delete_preserves_other_crossings(self, code):
        d = to_chord_diagram(code)
        label = d.labels[0]
        after = delete_chord(d, label)
        for a in after.labels:
            assert after.crossing(a) == d.crossing(a) - {label}


class TestCanonicalForm:
    def test_relabel_rotate(self):
        assert str(canonicalize(parse_gauss_code("bcabca"))) == "abcabc"

    def test_reflection(self):
        assert str(canonicalize(parse_gauss_code("baba"))) == "abab"

    @given(gauss_words())
    def test_idempotent(self, code):
        once = canonicalize(code)
        assert canonicalize(once) == once

    @given(gauss_words(), st.data())
    def test_constant_on_orbit(self, code, data):
        length = len(code.word)
        rotation = data.draw(st.integers(0, max(length - 1, 0)))
        word = code.word[rotation:] + code.word[:rotation]
        if data.draw(st.booleans()):
            word = tuple(reversed(word))
        assert canonicalize(GaussCode(word)) == canonicalize(code)


class TestEnumeration:
    def test_one_chord(self):
        assert [str(w) for w in enumerate_codes(1)] == ["aa"]
        assert list(enumerate_codes(1, require_nonempty_crossings=True)) == []

    def test_two_chords(self):
        assert sorted(str(w) for w in enumerate_codes(2)) == ["aabb", "abab"]

    def test_three_chords(self):
        forms = [str(w) for w in enumerate_codes(3)]
        assert forms == ["aabbcc", "aabcbc", "aabccb", "abacbc", "abcabc"]

    @pytest.mark.parametrize("n,total", [(1, 1), (2, 3), (3, 15), (4, 105)])
    def test_orbit_sizes_account_for_every_matching(self, n, total):
        # sum of orbit sizes = number of endpoint matchings = (2n-1)!!
        assert sum(symmetry_orbit_size(w) for w in enumerate_codes(n)) == total

    def test_all_emitted_are_canonical(self):
        for form in enumerate_codes(4):
            assert isinstance(form, CanonicalForm)
            assert is_canonical(form)

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("GMK_MAX_N", "4")
        with pytest.raises(LimitExceeded):
            list(enumerate_codes(5))
        monkeypatch.delenv("GMK_MAX_N")
        with pytest.raises(LimitExceeded):
            list(enumerate_codes(9))
