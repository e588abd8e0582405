"""Double-occurrence words, chord diagrams, interlacement and smoothing.

Walking once around a closed curve with transversal double points and
writing down each crossing label as it is met produces a word in which
every label occurs exactly twice.  Placing the letters around a circle
and joining equal labels by chords gives the chord diagram of the curve;
two chords interlace when their endpoints alternate around the circle.

Smoothing a chord ``c`` splices the curve at that crossing.  On words
this removes both occurrences of ``c`` and reverses the segment between
them; on the interlacement relation it deletes ``c`` and toggles the
crossing status of every pair of chords that both crossed ``c``.  Both
constructions are implemented and the suite checks they agree.

Labels are opaque, case-sensitive tokens; chord indices follow first
occurrence, which fixes matrix row order everywhere else in the package.
"""
from __future__ import annotations

import itertools
import json
import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .bitmatrix import BitMatrix
from .errors import NotDoubleOccurrence, UnknownChord
from .limits import ENUMERATION_CAP, check_cap


@dataclass(frozen=True)
class GaussCode:
    """A double-occurrence word over opaque crossing labels."""

    word: tuple[str, ...]

    def __post_init__(self) -> None:
        counts: dict[str, int] = {}
        for token in self.word:
            counts[token] = counts.get(token, 0) + 1
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise NotDoubleOccurrence(
                f"labels occurring != 2 times: {', '.join(bad)}"
            )

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @cached_property
    def labels(self) -> tuple[str, ...]:
        """Chord labels in order of first occurrence."""
        seen: dict[str, None] = {}
        for token in self.word:
            seen.setdefault(token)
        return tuple(seen)

    def __str__(self) -> str:
        if all(len(token) == 1 for token in self.word):
            return "".join(self.word)
        return " ".join(self.word)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "word": list(self.word)})

    @classmethod
    def from_json(cls, text: str) -> "GaussCode":
        data = json.loads(text)
        return cls(tuple(str(token) for token in data["word"]))


@dataclass(frozen=True)
class CanonicalForm(GaussCode):
    """A Gauss code that is the least representative of its symmetry orbit."""


def parse_gauss_code(text: str | Sequence[str]) -> GaussCode:
    """Parse a Gauss code from text or a token sequence.

    Text containing whitespace or commas is split into tokens; otherwise
    each character is a label ("abcabc" style).

    >>> parse_gauss_code("abcabc").n
    3
    >>> str(parse_gauss_code("1, 2, 1, 2"))
    '1212'
    """
    if isinstance(text, str):
        stripped = text.strip()
        if not stripped:
            return GaussCode(())
        if any(sep in stripped for sep in (" ", "\t", ",")):
            tokens = [t for t in stripped.replace(",", " ").split() if t]
        else:
            tokens = list(stripped)
    else:
        tokens = [str(t) for t in text]
    return GaussCode(tuple(tokens))


@dataclass(frozen=True)
class ChordDiagram:
    """Chord endpoints on the 2n-point cycle plus the interlacement relation."""

    code: GaussCode

    @property
    def word(self) -> tuple[str, ...]:
        return self.code.word

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.code.labels

    @cached_property
    def positions(self) -> dict[str, tuple[int, int]]:
        """Label -> (first position, second position) on the cycle."""
        out: dict[str, tuple[int, int]] = {}
        first: dict[str, int] = {}
        for pos, token in enumerate(self.word):
            if token in first:
                out[token] = (first[token], pos)
            else:
                first[token] = pos
        return out

    @cached_property
    def crossings(self) -> dict[str, frozenset[str]]:
        """Label -> set of labels whose chords interlace it."""
        pos = self.positions
        labels = self.labels
        out: dict[str, set[str]] = {a: set() for a in labels}
        for a, b in itertools.combinations(labels, 2):
            if _interlaced(pos[a], pos[b]):
                out[a].add(b)
                out[b].add(a)
        return {a: frozenset(s) for a, s in out.items()}

    def crossing(self, label: str) -> frozenset[str]:
        """The set of chords crossing ``label`` (never contains ``label``)."""
        try:
            return self.crossings[label]
        except KeyError:
            raise UnknownChord(f"no chord labelled {label!r}") from None

    def parallel(self, label: str) -> frozenset[str]:
        """The set of chords not crossing ``label``, including ``label`` itself."""
        return frozenset(self.labels) - self.crossing(label)

    def interlaces(self, a: str, b: str) -> bool:
        return b in self.crossing(a)


def _interlaced(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # Exactly one endpoint of b lies strictly between the endpoints of a.
    # Positions come from a linear scan, so a[0] < a[1] always.
    return (a[0] < b[0] < a[1]) != (a[0] < b[1] < a[1])


def to_chord_diagram(code: GaussCode) -> ChordDiagram:
    return ChordDiagram(code)


def interlacement_matrix(diagram: ChordDiagram | GaussCode) -> BitMatrix:
    """0/1 matrix of the interlacement relation, rows in first-occurrence order."""
    if isinstance(diagram, GaussCode):
        diagram = ChordDiagram(diagram)
    labels = diagram.labels
    index = {label: i for i, label in enumerate(labels)}
    rows = []
    for label in labels:
        row = 0
        for other in diagram.crossings[label]:
            row |= 1 << index[other]
        rows.append(row)
    return BitMatrix(len(labels), tuple(rows))


def smooth_chord(diagram: ChordDiagram, label: str) -> ChordDiagram:
    """Smooth the crossing ``label``: drop both occurrences, reverse between.

    >>> str(smooth_chord(ChordDiagram(parse_gauss_code("abcabc")), "a").code)
    'cbbc'
    """
    if label not in diagram.positions:
        raise UnknownChord(f"no chord labelled {label!r}")
    i, j = diagram.positions[label]
    w = diagram.word
    new_word = w[:i] + tuple(reversed(w[i + 1 : j])) + w[j + 1 :]
    return ChordDiagram(GaussCode(new_word))


def smoothed_crossings(diagram: ChordDiagram, label: str) -> dict[str, frozenset[str]]:
    """Predicted interlacement after smoothing ``label``, via the toggle rule.

    The chord is deleted; every pair of chords that both crossed it has its
    crossing status flipped; all other pairs keep theirs.  This is the
    diagram-free counterpart of :func:`smooth_chord` and the two are
    required to agree label by label.
    """
    affected = diagram.crossing(label)
    out: dict[str, set[str]] = {
        a: set(s) - {label} for a, s in diagram.crossings.items() if a != label
    }
    for a, b in itertools.combinations(sorted(affected), 2):
        if b in out[a]:
            out[a].discard(b)
            out[b].discard(a)
        else:
            out[a].add(b)
            out[b].add(a)
    return {a: frozenset(s) for a, s in out.items()}


def delete_chord(diagram: ChordDiagram, label: str) -> ChordDiagram:
    """Remove a chord without reconnecting; other crossings are unchanged."""
    if label not in diagram.positions:
        raise UnknownChord(f"no chord labelled {label!r}")
    return ChordDiagram(GaussCode(tuple(t for t in diagram.word if t != label)))


# ---------------------------------------------------------------------------
# Canonical forms under rotation, reflection and relabelling


def _canonical_int_word(word: Sequence[str]) -> tuple[int, ...]:
    """Least relabelled word over all rotations and both directions.

    Tokens are renamed 0, 1, 2, ... by first occurrence within each
    candidate reading, and candidates are compared as integer tuples.
    """
    seq = tuple(word)
    length = len(seq)
    if length == 0:
        return ()
    best: tuple[int, ...] | None = None
    for start in range(length):
        for step in (1, -1):
            mapping: dict[str, int] = {}
            key: list[int] = []
            verdict = 0  # -1 better than best, 0 tied so far, 1 worse
            for t in range(length):
                token = seq[(start + step * t) % length]
                code = mapping.setdefault(token, len(mapping))
                key.append(code)
                if best is not None and verdict == 0:
                    if code > best[t]:
                        verdict = 1
                        break
                    if code < best[t]:
                        verdict = -1
            if best is None or verdict == -1:
                best = tuple(key)
    assert best is not None
    return best


def _token_for(index: int) -> str:
    if index < 26:
        return string.ascii_lowercase[index]
    return f"c{index}"


def canonicalize(code: GaussCode) -> CanonicalForm:
    """Least Gauss code over the 2n rotations, 2 reflections and relabelling.

    >>> str(canonicalize(parse_gauss_code("bcabca")))
    'abcabc'
    >>> str(canonicalize(parse_gauss_code("baba")))
    'abab'
    """
    ints = _canonical_int_word(code.word)
    return CanonicalForm(tuple(_token_for(i) for i in ints))


def is_canonical(code: GaussCode) -> bool:
    return canonicalize(code).word == code.word


def symmetry_orbit_size(code: GaussCode) -> int:
    """Number of distinct endpoint matchings in the symmetry orbit of the code."""
    length = len(code.word)
    if length == 0:
        return 1
    orbit = set()
    for start in range(length):
        for step in (1, -1):
            reading = tuple(code.word[(start + step * t) % length] for t in range(length))
            pairs = frozenset(
                frozenset(p for p, tok in enumerate(reading) if tok == label)
                for label in set(reading)
            )
            orbit.add(pairs)
    return len(orbit)


def _iter_matchings(length: int) -> Iterator[tuple[int, ...]]:
    """All double-occurrence int words of the given length, first-occurrence labelled."""
    word = [-1] * length

    def fill(next_label: int) -> Iterator[tuple[int, ...]]:
        try:
            free = word.index(-1)
        except ValueError:
            yield tuple(word)
            return
        word[free] = next_label
        for partner in range(free + 1, length):
            if word[partner] == -1:
                word[partner] = next_label
                yield from fill(next_label + 1)
                word[partner] = -1
        word[free] = -1

    yield from fill(0)


def enumerate_codes(
    n: int, require_nonempty_crossings: bool = False, max_n: int | None = None
) -> Iterator[CanonicalForm]:
    """All canonical Gauss codes with ``n`` chords, each exactly once.

    With ``require_nonempty_crossings`` only codes in which every chord is
    crossed by at least one other chord are produced.
    """
    if n < 0:
        raise ValueError("chord count must be non-negative")
    check_cap(n, max_n if max_n is not None else ENUMERATION_CAP, "chord count")
    if n == 0:
        yield CanonicalForm(())
        return
    for ints in _iter_matchings(2 * n):
        if _canonical_int_word([str(i) for i in ints]) != ints:
            continue
        form = CanonicalForm(tuple(_token_for(i) for i in ints))
        if require_nonempty_crossings:
            diagram = ChordDiagram(form)
            if any(not diagram.crossings[label] for label in form.labels):
                continue
        yield form
