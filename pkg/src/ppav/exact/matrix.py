"""Immutable dense matrices over exact scalars.

One ``Matrix`` class covers the integer, rational and Gaussian-rational
cases; the ring is whatever the entries are. The aliases below exist only to
document intent in signatures.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ppav.errors import DimensionMismatch


class Matrix:
    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch(f"declared {cols} columns, got {width}")
        else:
            width = cols or 0
        self.rows = len(rows)
        self.cols = width
        self._data = rows
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def _wrap(cls, rows: tuple, cols: int) -> Matrix:
        m = cls.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        m._hash = None
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._wrap(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls._wrap(tuple((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def diag(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls._wrap(
            tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls(zip(*columns))

    @classmethod
    def block_diag(cls, *blocks: Matrix) -> Matrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0 : c0 + b.cols] = b._data[i]
            r0 += b.rows
            c0 += b.cols
        return cls._wrap(tuple(map(tuple, out)), m)

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble a block matrix from a rectangular grid of blocks."""
        out = []
        for brow in grid:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise DimensionMismatch("block row heights differ")
            for i in range(height):
                out.append(tuple(e for b in brow for e in b._data[i]))
        return cls(out)

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def entries(self) -> Iterable:
        for r in self._data:
            yield from r

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix._wrap(tuple(r[c0:c1] for r in self._data[r0:r1]), c1 - c0)

    def blocks2(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        """Split a 2g x 2g matrix into its four g x g blocks (A, B, C, D)."""
        if self.rows != self.cols or self.rows % 2:
            raise DimensionMismatch(f"expected 2g x 2g matrix, got {self.shape}")
        g = self.rows // 2
        return (
            self.submatrix(0, g, 0, g),
            self.submatrix(0, g, g, 2 * g),
            self.submatrix(g, 2 * g, 0, g),
            self.submatrix(g, 2 * g, g, 2 * g),
        )

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack {self.shape} with {other.shape}")
        return Matrix._wrap(
            tuple(a + b for a, b in zip(self._data, other._data)), self.cols + other.cols
        )

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise DimensionMismatch(f"vstack {self.shape} with {other.shape}")
        return Matrix._wrap(self._data + other._data, self.cols)

    # algebra --------------------------------------------------------------

    @property
    def T(self) -> Matrix:
        if not self.rows:
            return Matrix.zeros(self.cols, 0)
        return Matrix._wrap(tuple(zip(*self._data)), self.rows)

    def map(self, f: Callable) -> Matrix:
        return Matrix._wrap(tuple(tuple(f(e) for e in r) for r in self._data), self.cols)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"add {self.shape} + {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub {self.shape} - {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return self.map(lambda e: -e)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        return self.map(lambda e: e * c)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"matmul {self.shape} @ {other.shape}")
        if not other.cols:
            return Matrix.zeros(self.rows, 0)
        cols = tuple(zip(*other._data)) if other.rows else ((),) * other.cols
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), 0) for c in cols))
        return Matrix._wrap(tuple(out), other.cols)

    def __pow__(self, n: int) -> Matrix:
        if not self.is_square or n < 0:
            raise DimensionMismatch("power needs a square matrix and n >= 0")
        result, base = Matrix.identity(self.rows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self):
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), 0)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_integral(self) -> bool:
        return all(
            isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1)
            for e in self.entries()
        )

    def as_integer(self) -> Matrix:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return self.map(int)

    def mod(self, n: int) -> Matrix:
        return self.map(lambda e: e % n)

    def max_abs_entry(self) -> int:
        return max((abs(e) for e in self.entries()), default=0)

    # comparisons ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


IntegerMatrix = Matrix
RationalMatrix = Matrix
GaussianMatrix = Matrix
