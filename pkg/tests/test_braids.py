import itertools

import pytest
from hypothesis import given, settings

from conftest import permutations_1n
from gmk import (
    BraidWord,
    InversionSet,
    braid_record,
    inversion_set,
    is_valid_inversion_set,
    nonrepeating_braid_word,
    permutation_from_inversions,
    simulate_braid_word,
)
from gmk.errors import InvalidInversionSet

EXAMPLE_PI = (4, 2, 6, 1, 5, 3)
EXAMPLE_PAIRS = {(1, 2), (1, 4), (1, 6), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)}


class TestInversionSet:
    def test_identity(self):
        assert inversion_set((1, 2, 3, 4)).pairs == frozenset()

    def test_worked_example(self):
        assert inversion_set(EXAMPLE_PI).pairs == EXAMPLE_PAIRS

    def test_reversal_has_all_pairs(self):
        n = 5
        reverse = tuple(range(n, 0, -1))
        assert len(inversion_set(reverse).pairs) == n * (n - 1) // 2

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            inversion_set((1, 1, 3))

    def test_pair_bounds(self):
        with pytest.raises(ValueError):
            InversionSet(2, frozenset({(2, 1)}))


class TestValidity:
    def test_single_adjacent_pair(self):
        assert is_valid_inversion_set(InversionSet(3, frozenset({(1, 2)})))

    def test_interval_violation(self):
        assert not is_valid_inversion_set(InversionSet(3, frozenset({(1, 3)})))

    def test_transitivity_violation(self):
        assert not is_valid_inversion_set(
            InversionSet(3, frozenset({(1, 2), (2, 3)}))
        )

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_valid_iff_some_permutation_matches(self, n):
        from_perms = {
            inversion_set(pi).pairs
            for pi in itertools.permutations(range(1, n + 1))
        }
        all_pairs = list(itertools.combinations(range(1, n + 1), 2))
        for bits in itertools.product((False, True), repeat=len(all_pairs)):
            chosen = frozenset(p for p, b in zip(all_pairs, bits) if b)
            candidate = InversionSet(n, chosen)
            assert is_valid_inversion_set(candidate) == (chosen in from_perms)


class TestFromInversions:
    def test_empty_gives_identity(self):
        assert permutation_from_inversions(InversionSet(4, frozenset())) == (1, 2, 3, 4)

    def test_worked_example(self):
        assert (
            permutation_from_inversions(InversionSet(6, frozenset(EXAMPLE_PAIRS)))
            == EXAMPLE_PI
        )

    def test_invalid_raises(self):
        with pytest.raises(InvalidInversionSet):
            permutation_from_inversions(InversionSet(3, frozenset({(1, 3)})))

    @pytest.mark.parametrize("n", range(0, 7))
    def test_round_trip_exhaustive(self, n):
        for pi in itertools.permutations(range(1, n + 1)):
            assert permutation_from_inversions(inversion_set(pi)) == pi


class TestBraidWords:
    def test_identity_empty(self):
        assert nonrepeating_braid_word((1, 2, 3)).generators == ()

    def test_transposition(self):
        assert nonrepeating_braid_word((2, 1)).generators == (1,)

    def test_worked_example_word(self):
        word = nonrepeating_braid_word(EXAMPLE_PI)
        assert len(word) == len(EXAMPLE_PAIRS)
        final, crossings = simulate_braid_word(word)
        assert final == EXAMPLE_PI
        assert set(crossings) == EXAMPLE_PAIRS
        assert all(v == 1 for v in crossings.values())

    def test_generator_bounds(self):
        with pytest.raises(ValueError):
            BraidWord(3, (3,))

    @given(permutations_1n())
    @settings(deadline=None)
    def test_simulation_matches(self, pi):
        word = nonrepeating_braid_word(pi)
        assert len(word) == len(inversion_set(pi).pairs)
        final, crossings = simulate_braid_word(word)
        assert final == pi
        assert set(crossings) == inversion_set(pi).pairs
        assert all(v == 1 for v in crossings.values())

    def test_record_shape(self):
        record = braid_record((2, 1))
        assert record == {"pi": [2, 1], "inversions": [[1, 2]], "word": [1]}
