"""Realizability of chord diagrams: parity criteria and a genus oracle.

Two independent routes decide whether a diagram is the diagram of a
closed planar curve:

* the parity route: every chord must cross an even number of chords and
  every non-crossing pair must share an even number of common crossers
  (the even condition), and the same must still hold after smoothing any
  single chord;
* the embedding route: the curve's underlying 4-valent map is embedded in
  every orientable surface compatible with transversal crossings (two
  rotation choices per crossing), faces are traced, and the minimal genus
  is read off the best Euler characteristic.

The embedding route is a direct topological definition and serves as
ground truth in the test suite; the parity route is the fast criterion
that gets audited against it.  The matrix reformulation of the parity
conditions (scalar products of interlacement rows) is also provided; it
is necessary but not sufficient on its own.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .bitmatrix import BitMatrix
from .errors import IsolatedChordError
from .gauss import (
    ChordDiagram,
    GaussCode,
    delete_chord,
    enumerate_codes,
    interlacement_matrix,
    smooth_chord,
)
from .limits import GENUS_ORACLE_CAP, check_cap


@dataclass(frozen=True)
class Witness:
    """Why a parity check failed.

    kind is "odd-chord" (a chord with an odd number of crossers),
    "odd-pair" (a non-crossing pair with an odd number of common
    crossers) or "smoothing" (the named chord was smoothed and the
    result failed, with the inner failure attached).
    """

    kind: str
    labels: tuple[str, ...]
    count: int
    smoothed: str | None = None

    def __str__(self) -> str:
        if self.kind == "odd-chord":
            return f"|{self.labels[0]}_×| = {self.count} is odd"
        if self.kind == "odd-pair":
            a, b = self.labels
            return f"|{a}_× ∩ {b}_×| = {self.count} is odd"
        inner = Witness(
            "odd-chord" if len(self.labels) == 1 else "odd-pair",
            self.labels,
            self.count,
        )
        return f"smoothing {self.smoothed} leaves {inner}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "labels": list(self.labels), "count": self.count}
        if self.smoothed is not None:
            out["smoothed"] = self.smoothed
        return out


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the even condition on a single diagram."""

    passes: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class RealizabilityReport:
    realizable: bool
    method: str  # "smoothing" or "oracle"
    witness: Witness | None = None
    genus: int | None = None

    def to_json(self) -> dict:
        out: dict = {"realizable": self.realizable, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.genus is not None:
            out["genus"] = self.genus
        return out


def even_condition(diagram: ChordDiagram | GaussCode) -> ConditionReport:
    """Check the even condition; the witness is the first failure in index order.

    Chords are scanned first, then non-crossing pairs, both in
    first-occurrence order.
    """
    if isinstance(diagram, GaussCode):
        diagram = ChordDiagram(diagram)
    matrix = interlacement_matrix(diagram)
    labels = diagram.labels
    for i, label in enumerate(labels):
        weight = matrix.row_weight(i)
        if weight & 1:
            return ConditionReport(False, Witness("odd-chord", (label,), weight))
    for i, j in itertools.combinations(range(len(labels)), 2):
        if matrix.entry(i, j):
            continue
        common = matrix.scalar_product((i, j))
        if common & 1:
            return ConditionReport(
                False, Witness("odd-pair", (labels[i], labels[j]), common)
            )
    return ConditionReport(True)


def _strip_isolated(diagram: ChordDiagram) -> ChordDiagram:
    """Delete chords nothing crosses, repeating until none remain."""
    while True:
        isolated = [a for a in diagram.labels if not diagram.crossings[a]]
        if not isolated:
            return diagram
        for label in isolated:
            diagram = delete_chord(diagram, label)


def smoothing_realizable(
    diagram: ChordDiagram | GaussCode, strict: bool = False
) -> RealizabilityReport:
    """Decide realizability: the even condition must survive every smoothing.

    Chords nothing crosses never obstruct planarity, so they are deleted
    up front; with ``strict`` such inputs are rejected instead.
    """
    if isinstance(diagram, GaussCode):
        diagram = ChordDiagram(diagram)
    isolated = [a for a in diagram.labels if not diagram.crossings[a]]
    if isolated and strict:
        raise IsolatedChordError(
            f"chords crossed by nothing: {', '.join(isolated)}"
        )
    diagram = _strip_isolated(diagram)
    base = even_condition(diagram)
    if not base.passes:
        return RealizabilityReport(False, "smoothing", base.witness)
    for label in diagram.labels:
        after = even_condition(smooth_chord(diagram, label))
        if not after.passes:
            assert after.witness is not None
            inner = after.witness
            witness = Witness(
                "smoothing", inner.labels, inner.count, smoothed=label
            )
            return RealizabilityReport(False, "smoothing", witness)
    return RealizabilityReport(True, "smoothing")


@dataclass(frozen=True)
class MatrixConditionReport:
    """Parity conditions on an interlacement matrix (necessary only).

    Violations carry a tag and the offending row indices:
    "odd-row" for <m_i, m_i> odd, "noncrossing-pair" for a zero entry
    with odd scalar product, "crossing-triple" for a pairwise-crossing
    triple whose pairwise products sum to 0 mod 2.
    """

    passes: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]


def matrix_conditions(matrix: BitMatrix) -> MatrixConditionReport:
    """Check the three parity conditions a realizable diagram's matrix obeys."""
    violations: list[tuple[str, tuple[int, ...]]] = []
    for i in range(matrix.size):
        if matrix.row_weight(i) & 1:
            violations.append(("odd-row", (i,)))
    for i, j in itertools.combinations(range(matrix.size), 2):
        if matrix.entry(i, j):
            continue
        if matrix.scalar_product((i, j)) & 1:
            violations.append(("noncrossing-pair", (i, j)))
    for i, j, k in itertools.combinations(range(matrix.size), 3):
        if matrix.entry(i, j) and matrix.entry(i, k) and matrix.entry(j, k):
            total = (
                matrix.scalar_product((i, j))
                + matrix.scalar_product((i, k))
                + matrix.scalar_product((j, k))
            )
            if total % 2 != 1:
                violations.append(("crossing-triple", (i, j, k)))
    return MatrixConditionReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# Brute-force embedding oracle


@dataclass(frozen=True)
class RotationAssignment:
    """One transversal-respecting cyclic order choice per crossing."""

    bits: tuple[int, ...]


@dataclass(frozen=True)
class EmbeddingStats:
    assignment: RotationAssignment
    faces: int
    euler: int


def iter_embeddings(code: GaussCode) -> Iterator[EmbeddingStats]:
    """Trace the faces of every transversal rotation system of the curve's map.

    The map has one vertex per crossing and one edge per arc between
    consecutive occurrences along the word.  Each crossing admits exactly
    two cyclic orders of its four incident edge ends in which the two
    passages of the curve interleave.  Faces are traced with the
    convention: the next boundary dart is the rotation successor of the
    reversed dart.
    """
    n = code.n
    if n == 0:
        return
    length = 2 * n
    # Arc t runs from occurrence t to occurrence t + 1 (cyclically).
    # Dart 2t is its end at occurrence t, dart 2t + 1 at occurrence t + 1.
    occurrences: dict[str, list[int]] = {}
    for pos, token in enumerate(code.word):
        occurrences.setdefault(token, []).append(pos)
    vertices = [occurrences[label] for label in code.labels]

    def darts_at(pos: int) -> tuple[int, int]:
        incoming = 2 * ((pos - 1) % length) + 1
        outgoing = 2 * pos
        return incoming, outgoing

    alpha = [d ^ 1 for d in range(2 * length)]
    for mask in range(1 << n):
        sigma = [0] * (2 * length)
        for v, (p, q) in enumerate(vertices):
            in1, out1 = darts_at(p)
            in2, out2 = darts_at(q)
            if (mask >> v) & 1:
                cycle = (in1, out2, out1, in2)
            else:
                cycle = (in1, in2, out1, out2)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                sigma[a] = b
        seen = [False] * (2 * length)
        faces = 0
        for start in range(2 * length):
            if seen[start]:
                continue
            faces += 1
            d = start
            while not seen[d]:
                seen[d] = True
                d = sigma[alpha[d]]
        yield EmbeddingStats(
            RotationAssignment(tuple((mask >> v) & 1 for v in range(n))),
            faces,
            n - length + faces,
        )


def oracle_realizable(code: GaussCode, max_n: int | None = None) -> RealizabilityReport:
    """Ground-truth verdict: minimal genus over all transversal embeddings."""
    check_cap(code.n, max_n if max_n is not None else GENUS_ORACLE_CAP, "chord count")
    if code.n == 0:
        return RealizabilityReport(True, "oracle", genus=0)
    best = max(stats.euler for stats in iter_embeddings(code))
    genus = (2 - best) // 2
    return RealizabilityReport(genus == 0, "oracle", genus=genus)


def audit_disagreements(max_n: int = 6, min_n: int = 2) -> Iterator[dict]:
    """Compare the smoothing criterion against the oracle, code by code.

    Runs over all canonical codes with every chord crossed, min_n <= n <=
    max_n, and yields a record for each disagreement (an empty stream
    means the two methods agree everywhere).
    """
    for n in range(min_n, max_n + 1):
        for form in enumerate_codes(n, require_nonempty_crossings=True, max_n=max_n):
            fast = smoothing_realizable(form).realizable
            truth = oracle_realizable(form).realizable
            if fast != truth:
                yield {"code": str(form), "smoothing": fast, "oracle": truth}


def minimal_even_but_unrealizable(max_n: int = 6) -> tuple[GaussCode, int]:
    """Smallest canonical code passing the even condition yet unrealizable.

    Returned as (code, genus); exists because the even condition alone is
    not sufficient.
    """
    for n in range(1, max_n + 1):
        for form in enumerate_codes(n):
            if not even_condition(form).passes:
                continue
            verdict = oracle_realizable(form)
            if not verdict.realizable:
                return form, verdict.genus or 0
    raise LookupError(f"no witness with at most {max_n} chords")
