"""Exact sparse linear algebra over the rationals.

Every homology computation in this package reduces to three questions about
a matrix with rational entries: its rank, a basis of its kernel, and whether
a vector lies in its column span (with an explicit coefficient witness).
All three are answered by fraction-exact Gauss-Jordan elimination; there is
deliberately no floating point anywhere in this package.

Matrices are stored sparsely as {(row, col): Fraction}.  Elimination works
on per-row {col: Fraction} dicts, which is ample for the sign-structured
differentials produced by the other modules (a few hundred rows at most).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class RationalMatrix:
    """Sparse matrix over Q.  Zero entries are never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i}, {j}) out of bounds for {rows}x{cols}")
            q = Fraction(value)
            if q:
                clean[(i, j)] = q
        self.entries = clean

    @classmethod
    def from_rows(cls, rows_data, cols=None):
        rows_data = [list(r) for r in rows_data]
        if cols is None:
            cols = len(rows_data[0]) if rows_data else 0
        entries = {}
        for i, row in enumerate(rows_data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = Fraction(value)
        return cls(len(rows_data), cols, entries)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        entries = {}
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("ragged columns")
            for i, value in enumerate(col):
                if value:
                    entries[(i, j)] = Fraction(value)
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def column(self, j: int):
        if not 0 <= j < self.cols:
            raise ValueError("column index out of range")
        return [self.entries.get((i, j), Fraction(0)) for i in range(self.rows)]

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] += v * Fraction(vec[j])
        return out

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        by_row = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, {})[k] = v
        other_rows = other.row_dicts()
        entries = {}
        for i, row in by_row.items():
            acc = {}
            for k, v in row.items():
                for j, w in other_rows[k].items():
                    acc[j] = acc.get(j, Fraction(0)) + v * w
            for j, total in acc.items():
                if total:
                    entries[(i, j)] = total
        return RationalMatrix(self.rows, other.cols, entries)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            entries[(i, j + self.cols)] = v
        return RationalMatrix(self.rows, self.cols + other.cols, entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"


class SpanResult(NamedTuple):
    """Answer to "is v in the column span?", with a certificate when it is."""

    in_span: bool
    coefficients: list | None


def _rref(row_dicts, ncols):
    """Gauss-Jordan on sparse rows.  Returns (pivot column list, reduced rows).

    reduced[k] has a 1 in column pivots[k] and zeros in every other pivot
    column; pivot order is ascending by column.
    """
    work = [dict(r) for r in row_dicts if r]
    pivots = []
    reduced = []
    for col in range(ncols):
        pivot_row = None
        for idx, r in enumerate(work):
            if r.get(col):
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        row = work.pop(pivot_row)
        inv = Fraction(1) / row[col]
        row = {c: v * inv for c, v in row.items()}
        for group in (work, reduced):
            for r in group:
                f = r.get(col)
                if not f:
                    continue
                for c, v in row.items():
                    nv = r.get(c, Fraction(0)) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        work = [r for r in work if r]
        reduced.append(row)
        pivots.append(col)
        if not work:
            break
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [pivots[k] for k in order], [reduced[k] for k in order]


def rank(m: RationalMatrix) -> int:
    pivots, _ = _rref(m.row_dicts(), m.cols)
    return len(pivots)


def kernel_basis(m: RationalMatrix):
    """Basis of {x : m x = 0}, one vector per free column, ascending."""
    pivots, reduced = _rref(m.row_dicts(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for p, row in zip(pivots, reduced):
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def in_span(m: RationalMatrix, v) -> SpanResult:
    """Decide v in columnspace(m); on success return x with m x = v."""
    v = [Fraction(x) for x in v]
    if len(v) != m.rows:
        raise ValueError("vector length does not match row count")
    aug = m.cols  # augmented column index
    rows = m.row_dicts()
    for i, value in enumerate(v):
        if value:
            rows[i][aug] = value
    pivots, reduced = _rref(rows, m.cols + 1)
    if aug in pivots:
        return SpanResult(False, None)
    witness = [Fraction(0)] * m.cols
    for p, row in zip(pivots, reduced):
        witness[p] = row.get(aug, Fraction(0))
    return SpanResult(True, witness)
