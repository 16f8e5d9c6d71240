"""Exact sparse linear algebra over the rationals.

Rows are dicts ``column -> Fraction``.  The reduced row echelon form of a
matrix is unique, so every routine here is deterministic regardless of
input row order.  Elimination itself uses the rule "smallest column, then
smallest row" when choosing pivots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from stringlinks.errors import DomainError

Row = dict[int, Fraction]


def _as_row(entries: Mapping[int, object]) -> Row:
    return {c: Fraction(v) for c, v in entries.items() if v}


@dataclass(frozen=True, eq=False)
class SparseMatrix:
    nrows: int
    ncols: int
    rows: tuple[Row, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(_as_row(r) for r in self.rows)
        rows = rows + tuple({} for _ in range(self.nrows - len(rows)))
        if len(rows) != self.nrows:
            raise DomainError(f"got {len(rows)} rows for a {self.nrows}-row matrix")
        for r in rows:
            for c in r:
                if not 0 <= c < self.ncols:
                    raise DomainError(f"column {c} out of range 0..{self.ncols - 1}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_dense(cls, data: Iterable[Iterable[object]]) -> SparseMatrix:
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, tuple({c: v for c, v in enumerate(r)} for r in data))

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(n, n, tuple({i: 1} for i in range(n)))

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Mapping[int, object]]) -> SparseMatrix:
        columns = list(columns)
        rows: list[Row] = [{} for _ in range(nrows)]
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    rows[r][c] = Fraction(v)
        return cls(nrows, len(columns), tuple(rows))

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r].get(c, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def to_dense(self) -> list[list[Fraction]]:
        return [[r.get(c, Fraction(0)) for c in range(self.ncols)] for r in self.rows]

    def transpose(self) -> SparseMatrix:
        rows: list[Row] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for c, v in r.items():
                rows[c][i] = v
        return SparseMatrix(self.ncols, self.nrows, tuple(rows))

    def apply(self, vec: Mapping[int, object]) -> Row:
        """Matrix times a sparse column vector."""
        vec = _as_row(vec)
        out: Row = {}
        for i, r in enumerate(self.rows):
            s = sum((v * vec[c] for c, v in r.items() if c in vec), Fraction(0))
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise DomainError("dimension mismatch in matrix product")
        rows = []
        for r in self.rows:
            acc: Row = {}
            for k, v in r.items():
                for c, w in other.rows[k].items():
                    acc[c] = acc.get(c, 0) + v * w
            rows.append(acc)
        return SparseMatrix(self.nrows, other.ncols, tuple(rows))


class Echelon:
    """Incrementally built reduced row echelon basis of a row space.

    Pivot rows are kept fully reduced against each other, so reducing a
    vector needs a single pass over its pivot columns.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, Row] = {}

    def reduce(self, vec: Mapping[int, object]) -> Row:
        row = _as_row(vec)
        for c in sorted(c for c in row if c in self.pivots):
            f = row.get(c)
            if not f:
                continue
            for k, v in self.pivots[c].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, vec: Mapping[int, object]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        row = self.reduce(vec)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, prow in self.pivots.items():
            f = prow.get(p)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[Row]:
        return [dict(self.pivots[p]) for p in sorted(self.pivots)]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Span of vectors in ``Q^ambient``, stored as a reduced echelon basis."""

    ambient: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Mapping[int, object]]) -> Subspace:
        ech = Echelon(ambient)
        for v in vectors:
            for c in v:
                if not 0 <= c < ambient:
                    raise DomainError(f"index {c} outside ambient dimension {ambient}")
            ech.add(v)
        return cls(ambient, tuple(ech.rows()))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(min(r) for r in self.basis)

    def _echelon(self) -> Echelon:
        ech = Echelon(self.ambient)
        ech.pivots = {min(r): r for r in self.basis}
        return ech

    def reduce(self, vec: Mapping[int, object]) -> Row:
        return self._echelon().reduce(vec)

    def __contains__(self, vec) -> bool:
        return not self.reduce(vec)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis


def rref(m: SparseMatrix) -> tuple[SparseMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (0-based)."""
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.add(r)
    rows = ech.rows()
    return SparseMatrix(m.nrows, m.ncols, tuple(rows)), tuple(min(r) for r in rows)


def rank(m: SparseMatrix) -> int:
    return len(rref(m)[1])


def row_space(m: SparseMatrix) -> Subspace:
    return Subspace.span(m.ncols, m.rows)


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Right kernel ``{v : m v = 0}``."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v: Row = {f: Fraction(1)}
        for r, p in zip(reduced.rows, pivots):
            if f in r:
                v[p] = -r[f]
        vectors.append(v)
    return Subspace.span(m.ncols, vectors)


def quotient_dim(ambient: int, sub: Subspace) -> int:
    if sub.ambient != ambient:
        raise DomainError(f"subspace lives in dimension {sub.ambient}, not {ambient}")
    return ambient - sub.dim


def member_of_span(v: Mapping[int, object], sub: Subspace) -> bool:
    for c in v:
        if not 0 <= c < sub.ambient:
            raise DomainError(f"index {c} outside ambient dimension {sub.ambient}")
    return v in sub
