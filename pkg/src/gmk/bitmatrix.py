"""Symmetric 0/1 matrices with bit-packed rows.

Rows are Python ints used as bit vectors (bit ``t`` of row ``i`` is the
entry ``m[i][t]``), so row intersections are single AND operations and
entry counts are popcounts.  All matrices handled here are symmetric with
zero diagonal: they record which pairs of chords of a diagram interlace.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonzeroDiagonal, NotSymmetric


@dataclass(frozen=True)
class BitMatrix:
    """A symmetric Z2 matrix with zero diagonal, rows packed into ints."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.size:
            raise ValueError("row count does not match size")
        mask = (1 << self.size) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {i} has bits outside the matrix")
            if (row >> i) & 1:
                raise NonzeroDiagonal(f"entry ({i}, {i}) is 1")
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise NotSymmetric(f"entries ({i}, {j}) and ({j}, {i}) differ")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        size = len(rows)
        packed = []
        for row in rows:
            if len(row) != size:
                raise ValueError("matrix is not square")
            packed.append(sum((1 << t) for t, v in enumerate(row) if v))
        return cls(size, tuple(packed))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(row >> t) & 1 for t in range(self.size)] for row in self.rows]

    def row_weight(self, i: int) -> int:
        return self.rows[i].bit_count()

    def is_full_row(self, i: int) -> bool:
        """True when row ``i`` has a 1 in every off-diagonal position."""
        return self.row_weight(i) == self.size - 1

    def scalar_product(self, indices: Iterable[int], mod2: bool = False) -> int:
        """Count positions where all the given rows carry a 1.

        ``indices`` may repeat (a multiset); out-of-range indices raise
        IndexError.  With ``mod2`` the count is reduced modulo 2.
        """
        idx = list(indices)
        if not idx:
            raise IndexError("need at least one row index")
        acc = (1 << self.size) - 1
        for i in idx:
            if not 0 <= i < self.size:
                raise IndexError(f"row index {i} out of range")
            acc &= self.rows[i]
        count = acc.bit_count()
        return count & 1 if mod2 else count

    def permuted(self, order: Sequence[int]) -> "BitMatrix":
        """Matrix with rows and columns reordered so new index k is old order[k]."""
        size = self.size
        if sorted(order) != list(range(size)):
            raise ValueError("order must be a permutation of the indices")
        rows = []
        for a in range(size):
            row = 0
            src = self.rows[order[a]]
            for b in range(size):
                if (src >> order[b]) & 1:
                    row |= 1 << b
            rows.append(row)
        return BitMatrix(size, tuple(rows))

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "rows": self.to_lists()})

    @classmethod
    def from_json(cls, text: str) -> "BitMatrix":
        data = json.loads(text)
        if not isinstance(data, dict) or "rows" not in data:
            raise ValueError("expected an object with a 'rows' field")
        matrix = cls.from_lists(data["rows"])
        if "size" in data and data["size"] != matrix.size:
            raise ValueError("declared size does not match the rows")
        return matrix

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.to_lists())
