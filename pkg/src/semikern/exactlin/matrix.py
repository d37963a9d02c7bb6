"""Immutable integer matrices.

A single matrix type serves both the prime-field routines (entries are
residues) and the integer routines (entries are arbitrary Python ints).
Matrices act on column vectors, so ``a @ b`` is the composite "first b,
then a".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError(
                f"entries do not match shape {self.rows}x{self.cols}"
            )

    # construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> Matrix:
        columns = [tuple(c) for c in columns]
        data = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> Matrix:
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        d = [[0] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            d[i][i] = e
        return cls.from_rows(d, cols)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(tuple(self.data[i][j] for i in range(self.rows))
                            for j in range(self.cols)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    # arithmetic (over Z; callers reduce) ------------------------------

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return Matrix(self.rows, other.cols,
                      tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ocols)
                            for r in self.data))

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r, s))
                            for r, s in zip(self.data, other.data)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c: int) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.data))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def mod(self, p: int) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(a % p for a in r) for r in self.data))

    def mod_rows(self, moduli: Sequence[int]) -> Matrix:
        """Reduce row ``j`` modulo ``moduli[j]``."""
        if len(moduli) != self.rows:
            raise ValueError("one modulus per row required")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a % m for a in r) for r, m in zip(self.data, moduli)))

    # block assembly ---------------------------------------------------

    def hstack(self, *others: Matrix) -> Matrix:
        out = self
        for o in others:
            if o.rows != out.rows:
                raise ValueError("row counts differ in hstack")
            out = Matrix(out.rows, out.cols + o.cols,
                         tuple(a + b for a, b in zip(out.data, o.data)))
        return out

    def vstack(self, *others: Matrix) -> Matrix:
        out = self
        for o in others:
            if o.cols != out.cols:
                raise ValueError("column counts differ in vstack")
            out = Matrix(out.rows + o.rows, out.cols, out.data + o.data)
        return out

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
        rows, cols = list(rows), list(cols)
        return Matrix(len(rows), len(cols),
                      tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def __str__(self):
        return str(self.tolist())
