"""Exact rational linear algebra (dense RREF, rank, kernel).

Matrices are small here, so plain Gaussian elimination over
:class:`fractions.Fraction` is used. :class:`RowReducer` keeps an
incremental echelon basis with sparse rows for tall constraint systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["RationalMatrix", "RowReducer", "null_space", "rank", "rref"]


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * Fraction(x) for a, x in zip(row, v)), Fraction(0)) for row in self.to_rows()]


def _as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix.from_rows(m)


def rref(m: RationalMatrix | Sequence[Sequence]) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = _as_matrix(m)
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix.from_rows(a, m.cols), pivots


def rank(m: RationalMatrix | Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def null_space(m: RationalMatrix | Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    m = _as_matrix(m)
    red, pivots = rref(m)
    rows = red.to_rows()
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


class RowReducer:
    """Incremental echelon basis over sparse rational rows.

    Rows are ``{column: value}`` maps. Each stored row has a distinct pivot
    (its smallest column) with coefficient 1, and every stored row is fully
    reduced against all others, so the stored set is always in RREF.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        r = {c: Fraction(v) for c, v in row.items() if v}
        for p in sorted(c for c in r if c in self._rows):
            f = r.get(p)
            if not f:
                continue
            for c, v in self._rows[p].items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        return r

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; return True iff it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for q, other in self._rows.items():
            f = other.get(p)
            if f:
                for c, v in r.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self._rows[p] = r
        return True

    def add_all(self, rows: Iterable[Mapping[int, Fraction]]) -> None:
        for row in rows:
            self.add(row)

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)

    def null_space(self) -> list[list[Fraction]]:
        free = [c for c in range(self.ncols) if c not in self._rows]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self._rows.items():
                if f in row:
                    v[p] = -row[f]
            basis.append(v)
        return basis
