"""Exact dense matrices over a :class:`~confluent.field.Field`.

Gaussian elimination here is deliberately plain: the first nonzero entry in
a column is taken as pivot. Over Q or GF(p) every nonzero pivot is exact,
so magnitude-based pivoting buys nothing.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix, ZeroDiagonal
from .field import Field, Scalar, ScalarLike


class DenseMatrix:
    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike | str], field: Field):
        es = tuple(field(e) for e in entries)
        if len(es) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(es)}")
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Scalar, ...] = es
        self.field = field

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike | str]], field: Field) -> DenseMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(r, c, [e for row in rows for e in row], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], field: Field) -> DenseMatrix:
        return cls.from_rows(list(zip(*columns)), field) if columns else cls(0, 0, (), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> DenseMatrix:
        return cls(rows, cols, [field.zero] * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field) -> DenseMatrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)], field)

    @classmethod
    def block_diag(cls, blocks: Sequence[DenseMatrix], field: Field) -> DenseMatrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        grid = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    grid[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(n, m, [e for row in grid for e in row], field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Scalar]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[Scalar]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> list[list[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> DenseMatrix:
        return DenseMatrix.from_columns(self.tolist(), self.field) if self.rows else self

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> DenseMatrix:
        return DenseMatrix.from_rows([self.row(i)[c0:c1] for i in range(r0, r1)], self.field)

    def _check_field(self, other: DenseMatrix) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine matrices over {self.field} and {other.field}")

    def __matmul__(self, other):
        if isinstance(other, DenseMatrix):
            self._check_field(other)
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            zero = self.field.zero
            b_cols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                a = self.row(i)
                for col in b_cols:
                    acc = zero
                    for x, y in zip(a, col):
                        if not x.is_zero() and not y.is_zero():
                            acc = acc + x * y
                    out.append(acc)
            return DenseMatrix(self.rows, other.cols, out, self.field)
        if isinstance(other, (list, tuple)):
            return self.apply(other)
        return NotImplemented

    mul = __matmul__

    def apply(self, vec: Sequence[ScalarLike]) -> list[Scalar]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        v = [self.field(x) for x in vec]
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            acc = zero
            for a, x in zip(self.row(i), v):
                acc = acc + a * x
            out.append(acc)
        return out

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return DenseMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.field)

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return DenseMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.field)

    def scale(self, c: ScalarLike) -> DenseMatrix:
        c = self.field(c)
        return DenseMatrix(self.rows, self.cols, [c * a for a in self.entries], self.field)

    def is_lower_triangular(self) -> bool:
        return all(self[i, j].is_zero() for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_upper_triangular(self) -> bool:
        return all(self[i, j].is_zero() for i in range(self.rows) for j in range(min(i, self.cols)))

    def diagonal(self) -> list[Scalar]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_integral(self) -> bool:
        return all(e.is_integer() for e in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries))

    def __str__(self) -> str:
        return format_matrix(self)

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols}, [{self}], {self.field})"


def format_matrix(a: DenseMatrix, row_sep: str = ";") -> str:
    return row_sep.join(",".join(str(e) for e in a.row(i)) for i in range(a.rows))


def identity(n: int, field: Field) -> DenseMatrix:
    return DenseMatrix.identity(n, field)


def mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    return a @ b


def transpose(a: DenseMatrix) -> DenseMatrix:
    return a.transpose()


def _require_square(a: DenseMatrix) -> None:
    if not a.is_square():
        raise DimensionMismatch(f"square matrix required, got {a.shape}")


def det_elimination(a: DenseMatrix) -> Scalar:
    """Determinant by exact Gaussian elimination; 0 for singular input."""
    _require_square(a)
    n = a.rows
    m = a.tolist()
    det = a.field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if piv is None:
            return a.field.zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        pk = m[k][k]
        det = det * pk
        inv = pk.inverse()
        for i in range(k + 1, n):
            if m[i][k].is_zero():
                continue
            f = m[i][k] * inv
            m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det


def inverse_elimination(a: DenseMatrix) -> DenseMatrix:
    """Inverse by Gauss-Jordan elimination on ``[A | I]``."""
    _require_square(a)
    n = a.rows
    f = a.field
    m = [row + [f.one if i == j else f.zero for j in range(n)] for i, row in enumerate(a.tolist())]
    for k in range(n):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = m[k][k].inverse()
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and not m[i][k].is_zero():
                c = m[i][k]
                m[i] = [x - c * y for x, y in zip(m[i], m[k])]
    return DenseMatrix.from_rows([row[n:] for row in m], f)


def solve_lower_triangular(lower: DenseMatrix, b: Sequence[ScalarLike]) -> list[Scalar]:
    """Forward substitution. Entries above the diagonal are ignored."""
    _require_square(lower)
    n = lower.rows
    if len(b) != n:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {n}x{n} system")
    f = lower.field
    x: list[Scalar] = []
    for i in range(n):
        diag = lower[i, i]
        if diag.is_zero():
            raise ZeroDiagonal(f"zero on the diagonal at row {i}")
        acc = f(b[i])
        for j in range(i):
            acc = acc - lower[i, j] * x[j]
        x.append(acc / diag)
    return x


def solve_upper_triangular(upper: DenseMatrix, b: Sequence[ScalarLike]) -> list[Scalar]:
    """Back substitution. Entries below the diagonal are ignored."""
    _require_square(upper)
    n = upper.rows
    if len(b) != n:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {n}x{n} system")
    f = upper.field
    x: list[Scalar] = [f.zero] * n
    for i in range(n - 1, -1, -1):
        diag = upper[i, i]
        if diag.is_zero():
            raise ZeroDiagonal(f"zero on the diagonal at row {i}")
        acc = f(b[i])
        for j in range(i + 1, n):
            acc = acc - upper[i, j] * x[j]
        x[i] = acc / diag
    return x


def invert_upper_triangular(upper: DenseMatrix) -> DenseMatrix:
    """Inverse of an upper triangular matrix by column-wise back substitution."""
    n = upper.rows
    f = upper.field
    cols = [solve_upper_triangular(upper, [f.one if i == j else f.zero for i in range(n)]) for j in range(n)]
    return DenseMatrix.from_columns(cols, f)
