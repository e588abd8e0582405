import itertools

import pytest
from hypothesis import given, settings

from conftest import gauss_words
from gmk import (
    audit_disagreements,
    enumerate_codes,
    even_condition,
    interlacement_matrix,
    iter_embeddings,
    matrix_conditions,
    minimal_even_but_unrealizable,
    oracle_realizable,
    parse_gauss_code,
    smoothing_realizable,
    to_chord_diagram,
)
from gmk.errors import IsolatedChordError, LimitExceeded

# Smallest canonical code that satisfies the even condition but embeds in
# no sphere; found by exhaustive search over n <= 6, frozen here.
EVEN_BUT_UNREALIZABLE = "abcdeafcbedf"


def brute_common_crossers(diagram, labels):
    """Independent count of chords crossing every chord in ``labels``."""
    sets = [diagram.crossing(a) for a in labels]
    return len(frozenset.intersection(*sets))


class TestScalarProducts:
    def test_pair_count(self):
        m = interlacement_matrix(parse_gauss_code("abcabc"))
        assert m.scalar_product((0, 1)) == 1  # only c crosses both a and b

    def test_repeated_index_is_row_weight(self):
        m = interlacement_matrix(parse_gauss_code("abab"))
        assert m.scalar_product((0, 0)) == 1

    def test_matches_direct_intersection_counts(self):
        for n in range(1, 6):
            for form in enumerate_codes(n):
                diagram = to_chord_diagram(form)
                matrix = interlacement_matrix(form)
                index = {label: i for i, label in enumerate(diagram.labels)}
                for size in (1, 2, 3):
                    for labels in itertools.combinations(diagram.labels, size):
                        expected = brute_common_crossers(diagram, labels)
                        got = matrix.scalar_product([index[a] for a in labels])
                        assert got == expected


class TestEvenCondition:
    def test_passes(self):
        assert even_condition(parse_gauss_code("abcabc")).passes

    def test_odd_chord_witness(self):
        report = even_condition(parse_gauss_code("abab"))
        assert not report.passes
        assert report.witness.kind == "odd-chord"
        assert report.witness.labels == ("a",)
        assert report.witness.count == 1

    def test_fails_on_path_pattern(self):
        assert not even_condition(parse_gauss_code("abacbc")).passes

    def test_odd_pair_witness(self):
        # all chords keep even counts after smoothing "a", but one
        # non-crossing pair is left sharing an odd number of crossers
        from gmk import smooth_chord

        diagram = to_chord_diagram(parse_gauss_code(EVEN_BUT_UNREALIZABLE))
        assert even_condition(diagram).passes
        report = even_condition(smooth_chord(diagram, "a"))
        assert not report.passes
        assert report.witness.kind == "odd-pair"
        assert report.witness.count % 2 == 1

    def test_equivalent_to_first_two_matrix_conditions(self):
        for n in range(0, 6):
            for form in enumerate_codes(n):
                report = matrix_conditions(interlacement_matrix(form))
                first_two_ok = not any(
                    tag in ("odd-row", "noncrossing-pair")
                    for tag, _ in report.violations
                )
                assert even_condition(form).passes == first_two_ok


class TestMatrixConditions:
    def test_all_crossing_triple_passes(self):
        assert matrix_conditions(interlacement_matrix(parse_gauss_code("abcabc"))).passes

    def test_odd_row_fails(self):
        report = matrix_conditions(interlacement_matrix(parse_gauss_code("abab")))
        assert not report.passes
        assert ("odd-row", (0,)) in report.violations

    def test_triple_condition_catches_even_passing_code(self):
        report = matrix_conditions(
            interlacement_matrix(parse_gauss_code(EVEN_BUT_UNREALIZABLE))
        )
        assert not report.passes
        assert all(tag == "crossing-triple" for tag, _ in report.violations)


class TestOracle:
    @pytest.mark.parametrize(
        "code,realizable,genus",
        [
            ("aa", True, 0),
            ("abab", False, 1),
            ("abcabc", True, 0),
            ("aabb", True, 0),
            (EVEN_BUT_UNREALIZABLE, False, 1),
        ],
    )
    def test_ground_truths(self, code, realizable, genus):
        report = oracle_realizable(parse_gauss_code(code))
        assert report.realizable == realizable
        assert report.genus == genus

    def test_empty_code(self):
        assert oracle_realizable(parse_gauss_code("")).genus == 0

    def test_curl_has_three_face_embedding(self):
        faces = {stats.faces for stats in iter_embeddings(parse_gauss_code("aa"))}
        assert faces == {1, 3}

    @given(gauss_words(min_chords=1, max_chords=5))
    @settings(max_examples=40, deadline=None)
    def test_embedding_sanity(self, code):
        stats = list(iter_embeddings(code))
        assert len(stats) == 2 ** code.n
        assert all(s.faces >= 1 for s in stats)
        assert all(s.euler % 2 == 0 and s.euler <= 2 for s in stats)

    def test_cap(self):
        with pytest.raises(LimitExceeded):
            oracle_realizable(parse_gauss_code("abcdefghijkabcdefghijk"))


class TestSmoothingCriterion:
    def test_realizable(self):
        assert smoothing_realizable(parse_gauss_code("abcabc")).realizable

    def test_fails_even_condition_outright(self):
        report = smoothing_realizable(parse_gauss_code("abab"))
        assert not report.realizable
        assert report.witness.kind == "odd-chord"

    def test_smoothing_witness(self):
        report = smoothing_realizable(parse_gauss_code(EVEN_BUT_UNREALIZABLE))
        assert not report.realizable
        assert report.witness.kind == "smoothing"
        assert report.witness.smoothed is not None

    def test_isolated_chords_deleted(self):
        assert smoothing_realizable(parse_gauss_code("aabb")).realizable
        assert smoothing_realizable(parse_gauss_code("")).realizable

    def test_strict_mode(self):
        with pytest.raises(IsolatedChordError):
            smoothing_realizable(parse_gauss_code("aabb"), strict=True)

    def test_curl_next_to_unrealizable_core(self):
        # deleting the curl must not change the verdict
        code = parse_gauss_code("ccabab")
        assert not smoothing_realizable(code).realizable
        assert not oracle_realizable(code).realizable


class TestDifferential:
    def test_audit_empty_up_to_four(self):
        assert list(audit_disagreements(4)) == []

    def test_necessity_small(self):
        for n in range(1, 5):
            for form in enumerate_codes(n):
                if oracle_realizable(form).realizable:
                    assert even_condition(form).passes
                    assert matrix_conditions(interlacement_matrix(form)).passes

    def test_minimal_even_but_unrealizable_is_frozen_value(self):
        code, genus = minimal_even_but_unrealizable(6)
        assert str(code) == EVEN_BUT_UNREALIZABLE
        assert genus == 1

    def test_matrix_conditions_decide_realizability_up_to_five(self):
        # On diagrams the three parity conditions are not just necessary:
        # exhaustively up to five chords they match the oracle exactly.
        for n in range(1, 6):
            for form in enumerate_codes(n):
                passes = matrix_conditions(interlacement_matrix(form)).passes
                assert passes == oracle_realizable(form).realizable
