"""Meander matrices: recognition, constructive enumeration, reconstruction.

A closed meander is a simple closed curve crossing a line N times (N
even).  Label the crossings 1..N in line order; the curve visits them in
some order w1..wN.  Closing the line far away and joining it to the
curve at one extra crossing r turns the configuration into a single
closed curve with Gauss code ``r 1 .. N r w1 .. wN``.  Its interlacement
matrix, with r as row 0, captures the meander completely: line chords
i < j interlace exactly when i is visited before j.

Recognition checks two equivalent formulations of the matrix conditions:
a structural one (full row, ordered transitive closure and interval
closure, plus the general parity conditions of realizable diagrams) and
a self-contained parity one (scalar products are even on the diagonal
and on non-crossing pairs, odd on crossing pairs).  Both are evaluated
after reordering so the distinguished full row comes first.

Enumeration fills an (N+1) x (N+1) tableau row by row.  Choosing a row
fixes its undetermined cells to 0 left of the diagonal and 1 to the
right; the parity conditions then become affine GF(2) equations over the
undetermined cells and are propagated by Gaussian elimination, pruning
infeasible branches.  Choices must alternate parity and start odd.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .bitmatrix import BitMatrix
from .errors import (
    AlreadyChosen,
    InvalidN,
    NotMeanderMatrix,
    ParityViolation,
    ReconstructionInconsistent,
)
from .braids import InversionSet, permutation_from_inversions
from .errors import InvalidInversionSet
from .gauss import GaussCode, interlacement_matrix
from .limits import MEANDER_ORACLE_CAP, check_cap
from .realizability import matrix_conditions, oracle_realizable


class _Infeasible:
    """Sentinel returned by propagate when the constraints are contradictory."""

    _instance: "_Infeasible | None" = None

    def __new__(cls) -> "_Infeasible":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __bool__(self) -> bool:
        return False


INFEASIBLE = _Infeasible()


# ---------------------------------------------------------------------------
# Recognition


def _full_rows(matrix: BitMatrix) -> tuple[int, ...]:
    return tuple(i for i in range(matrix.size) if matrix.is_full_row(i))


def _normalized(matrix: BitMatrix) -> BitMatrix | None:
    """Reorder so the smallest full row becomes row 0; None without one."""
    full = _full_rows(matrix)
    if not full:
        return None
    r = full[0]
    if r == 0:
        return matrix
    order = [r] + [i for i in range(matrix.size) if i != r]
    return matrix.permuted(order)


def _ordered_violations(matrix: BitMatrix) -> list[str]:
    """Ordered closure and interval conditions on i < j < k."""
    out = []
    for i, j, k in itertools.combinations(range(matrix.size), 3):
        if matrix.entry(i, j) and matrix.entry(j, k) and not matrix.entry(i, k):
            out.append(f"closure ({i},{j},{k})")
        if matrix.entry(i, k) and not (matrix.entry(i, j) or matrix.entry(j, k)):
            out.append(f"interval ({i},{j},{k})")
    return out


@dataclass(frozen=True)
class MeanderMatrixReport:
    """Both formulations of the meander-matrix conditions.

    Ordered-triple violations are reported in the coordinates of the
    normalized matrix (distinguished full row moved to index 0).
    """

    passes: bool
    structural_violations: tuple[str, ...]
    parity_violations: tuple[str, ...]
    full_rows: tuple[int, ...]

    @property
    def agrees(self) -> bool:
        return (not self.structural_violations) == (not self.parity_violations)


def meander_matrix_report(matrix: BitMatrix) -> MeanderMatrixReport:
    full = _full_rows(matrix)
    norm = _normalized(matrix)
    if norm is None:
        missing = ("no-full-row",)
        return MeanderMatrixReport(False, missing, missing, full)

    ordered = _ordered_violations(norm)

    structural = list(ordered)
    general = matrix_conditions(matrix)
    structural.extend(f"{tag} {idx}" for tag, idx in general.violations)

    parity = list(ordered)
    for i in range(norm.size):
        for j in range(i, norm.size):
            product = norm.scalar_product((i, j), mod2=True)
            if i == j or not norm.entry(i, j):
                if product:
                    parity.append(f"even-product ({i},{j})")
            elif not product:
                parity.append(f"odd-product ({i},{j})")

    return MeanderMatrixReport(
        not parity, tuple(structural), tuple(parity), full
    )


def is_meander_matrix(matrix: BitMatrix) -> bool:
    return meander_matrix_report(matrix).passes


@dataclass(frozen=True)
class MeanderMatrix:
    """A validated meander matrix with its distinguished full row."""

    matrix: BitMatrix
    full_row: int

    @classmethod
    def validate(cls, matrix: BitMatrix) -> "MeanderMatrix":
        report = meander_matrix_report(matrix)
        if not report.passes:
            raise NotMeanderMatrix("; ".join(report.parity_violations))
        return cls(matrix, report.full_rows[0])


# ---------------------------------------------------------------------------
# GF(2) elimination over tableau cells

Row = tuple[int, int]  # (variable bitmask, constant); meaning XOR(vars) = const


def _reduce(mask: int, const: int, rows: dict[int, Row]) -> Row:
    for lead in sorted(rows):
        if (mask >> lead) & 1:
            rmask, rconst = rows[lead]
            mask ^= rmask
            const ^= rconst
    return mask, const


def _insert(rows: dict[int, Row], mask: int, const: int) -> bool:
    """Add an equation; keep reduced echelon form; False on contradiction."""
    mask, const = _reduce(mask, const, rows)
    if mask == 0:
        return const == 0
    lead = (mask & -mask).bit_length() - 1
    for l, (rmask, rconst) in list(rows.items()):
        if (rmask >> lead) & 1:
            rows[l] = (rmask ^ mask, rconst ^ const)
    rows[lead] = (mask, const)
    return True


def _letters() -> Iterator[str]:
    for c in string.ascii_lowercase:
        yield c
    for a, b in itertools.product(string.ascii_lowercase, repeat=2):
        yield a + b


# ---------------------------------------------------------------------------
# Partial tableaux


@dataclass(frozen=True)
class PartialMeanderMatrix:
    """Working state of the tableau-filling construction.

    Every off-diagonal cell (i, j), i < j, owns a GF(2) variable; the
    reduced echelon basis in ``rows`` records everything known about the
    variables.  A cell is determined when its residue is constant,
    carries a named unknown when several cells share a one-variable
    residue, and is blank otherwise.  ``chosen`` is the visitation
    sequence so far; row 0 is pre-filled with ones.
    """

    n: int
    chosen: tuple[int, ...]
    rows: tuple[tuple[int, Row], ...]
    names: tuple[tuple[int, str], ...] = ()
    contradictory: bool = False

    @property
    def size(self) -> int:
        return self.n + 1

    def var(self, i: int, j: int) -> int:
        if i == j or not (0 <= i < self.size and 0 <= j < self.size):
            raise ValueError(f"no cell variable for ({i}, {j})")
        if i > j:
            i, j = j, i
        return i * self.size - i * (i + 1) // 2 + (j - i - 1)

    def residue(self, i: int, j: int) -> Row:
        if i == j:
            return (0, 0)
        rows = dict(self.rows)
        return _reduce(1 << self.var(i, j), 0, rows)

    def value(self, i: int, j: int) -> int | None:
        mask, const = self.residue(i, j)
        return const if mask == 0 else None

    def cell_text(self, i: int, j: int) -> str:
        """"0"/"1" when determined, a letter for a shared unknown, else ""."""
        if i == j:
            return "0"
        mask, const = self.residue(i, j)
        if mask == 0:
            return str(const)
        if mask.bit_count() == 1 and const == 0:
            names = dict(self.names)
            var = mask.bit_length() - 1
            if var in names:
                return names[var]
        return ""

    def row_values(self, i: int) -> tuple[int | None, ...]:
        return tuple(
            0 if t == i else self.value(i, t) for t in range(self.size)
        )

    def tableau_text(self) -> str:
        cells = [
            [self.cell_text(i, t) or "." for t in range(self.size)]
            for i in range(self.size)
        ]
        return "\n".join(" ".join(f"{c:>2}" for c in row) for row in cells)

    def is_complete(self) -> bool:
        return len(self.chosen) == self.n

    def to_bitmatrix(self) -> BitMatrix | None:
        """The filled matrix, or None while any cell is undetermined."""
        packed = []
        for i in range(self.size):
            row = 0
            for t in range(self.size):
                if t == i:
                    continue
                v = self.value(i, t)
                if v is None:
                    return None
                row |= v << t
            packed.append(row)
        return BitMatrix(self.size, tuple(packed))


def initial_tableau(n: int) -> PartialMeanderMatrix:
    """Empty (n+1)^2 tableau with zero diagonal and row 0 filled with ones."""
    if n < 2 or n % 2:
        raise InvalidN(f"need a positive even crossing count, got {n}")
    state = PartialMeanderMatrix(n, (), ())
    rows: dict[int, Row] = {}
    for t in range(1, n + 1):
        _insert(rows, 1 << state.var(0, t), 1)
    return replace(state, rows=tuple(sorted(rows.items())))


def delta_fill(state: PartialMeanderMatrix, index: int) -> PartialMeanderMatrix:
    """Choose a row: undetermined cells become 0 left of the diagonal, 1 right.

    Cells in already-chosen rows are left alone (their values were fixed
    when that row was chosen); all other cells of the row and column are
    pinned, determined cells included, so a conflicting earlier value
    surfaces as a contradiction at the next propagate.  Choices must
    alternate parity and the first choice must be odd.
    """
    if index == 0 or index in state.chosen:
        raise AlreadyChosen(f"row {index} is already filled")
    if not 1 <= index <= state.n:
        raise ValueError(f"row {index} out of range")
    if state.chosen:
        if state.chosen[-1] % 2 == index % 2:
            raise ParityViolation(
                f"row {index} has the same parity as the previous choice"
            )
    elif index % 2 == 0:
        raise ParityViolation("the first chosen row must be odd")

    rows = dict(state.rows)
    ok = not state.contradictory
    for t in range(1, state.n + 1):
        if t == index or t in state.chosen:
            continue
        want = 1 if t > index else 0
        if not _insert(rows, 1 << state.var(index, t), want):
            ok = False
    return replace(
        state,
        chosen=state.chosen + (index,),
        rows=tuple(sorted(rows.items())),
        contradictory=not ok,
    )


def _form_equation(
    state_size: int, rows: dict[int, Row], var, i: int, j: int
) -> Row | None:
    """The parity equation for rows i <= j, if currently affine.

    For i == j the row sum must be even.  For i < j the scalar product
    must equal the (i, j) entry; a product of two undetermined cells
    makes the equation non-affine and it is skipped.
    """
    if i == j:
        mask, const = 0, 0
        for t in range(state_size):
            if t == i:
                continue
            m, c = _reduce(1 << var(i, t), 0, rows)
            mask ^= m
            const ^= c
        return mask, const
    mask, const = _reduce(1 << var(i, j), 0, rows)
    for t in range(state_size):
        if t in (i, j):
            continue
        am, ac = _reduce(1 << var(i, t), 0, rows)
        bm, bc = _reduce(1 << var(j, t), 0, rows)
        if am == 0:
            if ac == 0:
                continue
            mask ^= bm
            const ^= bc
        elif bm == 0:
            if bc == 0:
                continue
            mask ^= am
            const ^= ac
        else:
            return None
    return mask, const


def propagate(state: PartialMeanderMatrix) -> PartialMeanderMatrix | _Infeasible:
    """Push the parity conditions through the tableau.

    Forms every currently-affine parity equation, eliminates, and repeats
    until nothing changes.  Newly forced cells become constants and newly
    implied equalities between cells become shared named unknowns.
    Returns INFEASIBLE on contradiction (a value, not an error).
    """
    if state.contradictory:
        return INFEASIBLE
    rows = dict(state.rows)
    size = state.size
    while True:
        changed = False
        for i in range(size):
            for j in range(i, size):
                eq = _form_equation(size, rows, state.var, i, j)
                if eq is None:
                    continue
                mask, const = eq
                if mask == 0:
                    if const:
                        return INFEASIBLE
                    continue
                before = dict(rows)
                if not _insert(rows, mask, const):
                    return INFEASIBLE
                if rows != before:
                    changed = True
        if not changed:
            break

    names = dict(state.names)
    used = set(names.values())
    fresh = (letter for letter in _letters() if letter not in used)
    shared: dict[int, int] = {}
    order: list[int] = []
    for i in range(size):
        for j in range(i + 1, size):
            mask, const = _reduce(1 << state.var(i, j), 0, rows)
            if mask and mask.bit_count() == 1 and const == 0:
                v = mask.bit_length() - 1
                shared[v] = shared.get(v, 0) + 1
                if shared[v] == 2 and v not in names:
                    order.append(v)
    for v in order:
        names[v] = next(fresh)
    return replace(
        state,
        rows=tuple(sorted(rows.items())),
        names=tuple(sorted(names.items())),
    )


# ---------------------------------------------------------------------------
# Enumeration


def _free_variables(state: PartialMeanderMatrix, rows: dict[int, Row]) -> list[int]:
    free = 0
    for i in range(state.size):
        for j in range(i + 1, state.size):
            mask, _ = _reduce(1 << state.var(i, j), 0, rows)
            free |= mask
    return [v for v in range(free.bit_length()) if (free >> v) & 1]


def _leaf_matrices(state: PartialMeanderMatrix) -> Iterator[BitMatrix]:
    """Filled matrices at a leaf, expanding any residual free unknowns."""
    matrix = state.to_bitmatrix()
    if matrix is not None:
        yield matrix
        return
    rows = dict(state.rows)
    free = _free_variables(state, rows)
    for bits in itertools.product((0, 1), repeat=len(free)):
        attempt = dict(rows)
        if not all(_insert(attempt, 1 << v, b) for v, b in zip(free, bits)):
            continue
        candidate = replace(state, rows=tuple(sorted(attempt.items())))
        matrix = candidate.to_bitmatrix()
        if matrix is not None and is_meander_matrix(matrix):
            yield matrix


def reverse_reflect(
    matrix: BitMatrix, visitation: tuple[int, ...]
) -> tuple[BitMatrix, tuple[int, ...]]:
    """The same meander travelled backwards along the reflected line.

    Line point i becomes N + 1 - i and the visitation order reverses;
    this is the symmetry that preserves the odd-start convention.
    """
    n = matrix.size - 1
    order = [0] + [n + 1 - a for a in range(1, n + 1)]
    flipped = tuple(n + 1 - visitation[n - 1 - t] for t in range(n))
    return matrix.permuted(order), flipped


def enumerate_meander_matrices(
    n: int,
    forced_prefix: Sequence[int] | None = None,
    canonical: bool = False,
) -> Iterator[tuple[BitMatrix, tuple[int, ...]]]:
    """All meander matrices with n line crossings, by tableau search.

    Yields (matrix, visitation) pairs, deduplicated by exact matrix
    equality, with candidate rows tried in ascending numeric order.  A
    forced prefix restricts the search to visitations starting with it;
    an infeasible prefix yields an empty stream.  With ``canonical`` each
    reverse-reflect orbit is emitted once, represented by its least
    member.
    """
    state = initial_tableau(n)
    result = propagate(state)
    assert not isinstance(result, _Infeasible)
    state = result
    if forced_prefix:
        for index in forced_prefix:
            following = propagate(delta_fill(state, index))
            if isinstance(following, _Infeasible):
                return
            state = following

    seen: set[tuple[int, ...]] = set()

    def emit(state: PartialMeanderMatrix) -> Iterator[tuple[BitMatrix, tuple[int, ...]]]:
        for matrix in _leaf_matrices(state):
            pair = (matrix, state.chosen)
            if canonical:
                mirrored = reverse_reflect(*pair)
                pair = min(pair, mirrored, key=lambda p: (p[0].rows, p[1]))
            if pair[0].rows in seen:
                continue
            seen.add(pair[0].rows)
            yield pair

    def walk(state: PartialMeanderMatrix) -> Iterator[tuple[BitMatrix, tuple[int, ...]]]:
        if state.is_complete():
            yield from emit(state)
            return
        if state.chosen:
            want = (state.chosen[-1] + 1) % 2
        else:
            want = 1
        for index in range(1, n + 1):
            if index % 2 != want or index in state.chosen:
                continue
            following = propagate(delta_fill(state, index))
            if isinstance(following, _Infeasible):
                continue
            yield from walk(following)

    yield from walk(state)


# ---------------------------------------------------------------------------
# Reconstruction


@dataclass(frozen=True)
class MeanderReconstruction:
    """A closed meander recovered from its matrix.

    ``visitation`` is the order the curve meets the line crossings; the
    Gauss code is ``r 1 .. n r w1 .. wn`` with r rendered as "0".  The
    upper and lower matchings pair consecutive visits, alternating sides,
    the pair (w_n, w_1) closing below through the far crossing r.
    """

    n: int
    visitation: tuple[int, ...]
    code: GaussCode
    upper: tuple[tuple[int, int], ...]
    lower: tuple[tuple[int, int], ...]

    @property
    def line_order(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "visitation": list(self.visitation),
            "code": list(self.code.word),
            "upper": [list(p) for p in self.upper],
            "lower": [list(p) for p in self.lower],
        }


def _is_noncrossing(pairs: Sequence[tuple[int, int]]) -> bool:
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def _single_cycle(n: int, pairs: list[tuple[int, int]]) -> bool:
    adjacency: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for a, b in pairs:
        adjacency[a].append(b)
        adjacency[b].append(a)
    if any(len(v) != 2 for v in adjacency.values()):
        return False
    seen = {1}
    prev, here = None, 1
    for _ in range(n):
        nxt = [x for x in adjacency[here] if x != prev]
        # a 2-cycle travels back along its other parallel edge
        prev, here = here, nxt[0] if nxt else adjacency[here][0]
        seen.add(here)
    return here == 1 and len(seen) == n


def reconstruction_from_visitation(n: int, visitation: Sequence[int]) -> MeanderReconstruction:
    """Build and validate the meander determined by a visitation order."""
    w = tuple(visitation)
    if sorted(w) != list(range(1, n + 1)):
        raise ReconstructionInconsistent(f"not a visitation order: {w}")
    if w[0] % 2 == 0 or any(w[t] % 2 == w[t + 1] % 2 for t in range(n - 1)):
        raise ReconstructionInconsistent(
            f"visitation must start odd and alternate parity: {w}"
        )
    arcs = [(w[t], w[t + 1]) for t in range(n - 1)] + [(w[-1], w[0])]
    ordered = [(min(a, b), max(a, b)) for a, b in arcs]
    upper = tuple(ordered[0::2])
    lower = tuple(ordered[1::2])
    if not (_is_noncrossing(upper) and _is_noncrossing(lower)):
        raise ReconstructionInconsistent(f"crossing arcs for visitation {w}")
    if not _single_cycle(n, list(upper) + list(lower)):
        raise ReconstructionInconsistent(f"arcs of {w} do not close a single loop")
    word = ("0",) + tuple(str(i) for i in range(1, n + 1)) + ("0",) + tuple(
        str(v) for v in w
    )
    return MeanderReconstruction(n, w, GaussCode(word), upper, lower)


def reconstruct_meander(matrix: BitMatrix | MeanderMatrix) -> MeanderReconstruction:
    """Recover the unique meander a meander matrix determines.

    The matrix is normalized so its smallest full row becomes row 0 and
    the remaining indices are relabelled 1..n preserving order; the
    visitation order is read off the rule "i < j interlace iff i is
    visited first".  Structural invariants of the result are verified
    and a failure raises ReconstructionInconsistent (a matrix that
    slipped past the predicate).
    """
    if isinstance(matrix, MeanderMatrix):
        matrix = matrix.matrix
    report = meander_matrix_report(matrix)
    if not report.passes:
        raise NotMeanderMatrix("; ".join(report.parity_violations))
    norm = _normalized(matrix)
    assert norm is not None
    n = norm.size - 1
    zero_pairs = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if not norm.entry(i, j)
    )
    try:
        ranks = permutation_from_inversions(InversionSet(n, zero_pairs))
    except InvalidInversionSet as exc:
        raise ReconstructionInconsistent(str(exc)) from exc
    w = [0] * n
    for i, rank in enumerate(ranks, start=1):
        w[rank - 1] = i
    return reconstruction_from_visitation(n, w)


def encode_meander(reconstruction: MeanderReconstruction) -> BitMatrix:
    """Interlacement matrix of the reconstructed code, r as row 0.

    Left inverse of :func:`reconstruct_meander` on matrices whose
    distinguished full row is already row 0.
    """
    return interlacement_matrix(reconstruction.code)


def oracle_enumerate_meanders(
    n: int, max_n: int | None = None
) -> Iterator[MeanderReconstruction]:
    """Independent meander search: try every visitation order directly.

    Candidates are the alternating-parity odd-start permutations of 1..n
    in lexicographic order; one is kept exactly when its closed-up Gauss
    code embeds in the sphere (genus 0 under the realizability oracle).
    """
    if n < 2 or n % 2:
        raise InvalidN(f"need a positive even crossing count, got {n}")
    check_cap(n, max_n if max_n is not None else MEANDER_ORACLE_CAP, "crossing count")
    odds = range(1, n + 1, 2)
    evens = range(2, n + 1, 2)
    candidates = sorted(
        tuple(v for pair in zip(o, e) for v in pair)
        for o in itertools.permutations(odds)
        for e in itertools.permutations(evens)
    )
    for w in candidates:
        word = ("0",) + tuple(str(i) for i in range(1, n + 1)) + ("0",) + tuple(
            str(v) for v in w
        )
        if oracle_realizable(GaussCode(word), max_n=n + 1).realizable:
            yield reconstruction_from_visitation(n, w)
