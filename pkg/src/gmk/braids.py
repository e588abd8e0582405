"""Permutations, inversion sets and minimal positive braid words.

A permutation of {1..n} is stored as its image tuple (pi(1), ..., pi(n)).
Its inversion set is the set of pairs (i, j) with i < j whose values are
out of order.  A set of pairs arises this way exactly when it is closed
under transitivity and under the interval rule: if (i, k) is present then
for every i < j < k at least one of (i, j), (j, k) is present.

Positive braid words are sequences of generator indices; generator i
swaps the strands at positions i and i + 1.  Every permutation is induced
by exactly one braid class in which any two strands cross at most once;
the canonical representative emitted here is the insertion-sort word.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInversionSet


def _check_permutation(images: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(images)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


@dataclass(frozen=True)
class InversionSet:
    """Pairs (i, j), i < j, with 1-based indices bounded by n."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"pair ({i}, {j}) out of range for n = {self.n}")

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def inversion_set(images: Sequence[int]) -> InversionSet:
    """All pairs i < j with pi(i) > pi(j).

    >>> inversion_set((2, 1, 3)).sorted_pairs()
    [(1, 2)]
    """
    pi = _check_permutation(images)
    n = len(pi)
    pairs = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pi[i - 1] > pi[j - 1]
    )
    return InversionSet(n, pairs)


def is_valid_inversion_set(inversions: InversionSet) -> bool:
    """True when some permutation has exactly this inversion set."""
    pairs = inversions.pairs
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        if j == k and (i, l) not in pairs:
            return False
    for i, k in pairs:
        for j in range(i + 1, k):
            if (i, j) not in pairs and (j, k) not in pairs:
                return False
    return True


def permutation_from_inversions(inversions: InversionSet) -> tuple[int, ...]:
    """The unique permutation whose inversion set is the given one.

    Each index is ranked by how many others precede it in the order the
    pair set induces.
    """
    if not is_valid_inversion_set(inversions):
        raise InvalidInversionSet(
            f"{sorted(inversions.pairs)} (n = {inversions.n})"
        )
    n = inversions.n
    pairs = inversions.pairs
    images = []
    for i in range(1, n + 1):
        rank = 1
        rank += sum(1 for j in range(1, i) if (j, i) not in pairs)
        rank += sum(1 for j in range(i + 1, n + 1) if (i, j) in pairs)
        images.append(rank)
    return tuple(images)


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word: generator indices 1 <= g <= strands - 1."""

    strands: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if not 1 <= g <= self.strands - 1:
                raise ValueError(f"generator {g} out of range")

    def __len__(self) -> int:
        return len(self.generators)


def simulate_braid_word(word: BraidWord) -> tuple[tuple[int, ...], Counter]:
    """Run the word top to bottom; return the induced permutation and crossings.

    The permutation maps each strand to its final position; the counter
    records how many times each unordered strand pair crosses.
    """
    arrangement = list(range(1, word.strands + 1))  # strand at each position
    crossings: Counter = Counter()
    for g in word.generators:
        a, b = arrangement[g - 1], arrangement[g]
        crossings[(min(a, b), max(a, b))] += 1
        arrangement[g - 1], arrangement[g] = b, a
    images = [0] * word.strands
    for position, strand in enumerate(arrangement, start=1):
        images[strand - 1] = position
    return tuple(images), crossings


def nonrepeating_braid_word(images: Sequence[int]) -> BraidWord:
    """The insertion-sort braid word inducing the given permutation.

    The word has one generator per inversion and no strand pair crosses
    twice: strands i < j cross exactly when (i, j) is an inversion.

    >>> nonrepeating_braid_word((2, 1)).generators
    (1,)
    """
    pi = _check_permutation(images)
    n = len(pi)
    arrangement = list(range(1, n + 1))
    word: list[int] = []
    for k in range(1, n):
        j = k
        while j > 0 and pi[arrangement[j - 1] - 1] > pi[arrangement[j] - 1]:
            word.append(j)
            arrangement[j - 1], arrangement[j] = arrangement[j], arrangement[j - 1]
            j -= 1
    return BraidWord(n, tuple(word))


def braid_record(images: Sequence[int]) -> dict:
    """JSON-ready record with the permutation, inversions and canonical word."""
    pi = _check_permutation(images)
    inversions = inversion_set(pi)
    word = nonrepeating_braid_word(pi)
    return {
        "pi": list(pi),
        "inversions": [list(p) for p in inversions.sorted_pairs()],
        "word": list(word.generators),
    }
