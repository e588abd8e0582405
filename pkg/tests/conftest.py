"""Shared hypothesis strategies and reference data for the test suite."""
from __future__ import annotations

import string

from hypothesis import strategies as st

from gmk import BitMatrix, GaussCode


@st.composite
def gauss_words(draw, min_chords: int = 0, max_chords: int = 5) -> GaussCode:
    n = draw(st.integers(min_chords, max_chords))
    letters = list(string.ascii_lowercase[:n]) * 2
    return GaussCode(tuple(draw(st.permutations(letters))))


@st.composite
def symmetric_matrices(draw, min_size: int = 1, max_size: int = 7) -> BitMatrix:
    size = draw(st.integers(min_size, max_size))
    rows = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return BitMatrix(size, tuple(rows))


@st.composite
def permutations_1n(draw, max_n: int = 7) -> tuple[int, ...]:
    n = draw(st.integers(0, max_n))
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


# Meander with six line crossings visited in the order 3, 4, 5, 2, 1, 6.
MEANDER_7X7 = BitMatrix.from_lists(
    [
        [0, 1, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 0, 1, 1],
        [1, 0, 0, 1, 1, 0, 1],
        [1, 1, 1, 1, 1, 1, 0],
    ]
)


def _nine_by_nine(a: int) -> BitMatrix:
    rows = [
        [0, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 1, 0, 1, 1, 1],
        [1, 0, 1, 0, 1, 0, 1, 1, 1],
        [1, 0, 1, 1, 0, 0, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0, a, a],
        [1, 1, 1, 1, 1, 1, a, 0, a],
        [1, 1, 1, 1, 1, 1, a, a, 0],
    ]
    return BitMatrix.from_lists(rows)


# The two completions of the 9x9 tableau whose visitation starts 5, 2, 3:
# the last three crossings either pairwise interlace or pairwise do not.
MEANDER_9X9_DISJOINT = _nine_by_nine(0)
MEANDER_9X9_CLIQUE = _nine_by_nine(1)
