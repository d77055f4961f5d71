"""Small dense matrices over the scalar fields, with exact elimination.

Rank, kernel, and solve decisions must be exact to certify emptiness of
intertwiner spaces and to make decompositions reproducible, so pivoting always
selects the first usable row or column (lowest index), never by magnitude.
In float mode the scalar's own tolerance decides what counts as zero.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .scalars import (
    GaussianRational,
    Scalar,
    as_scalar,
    scalar_from_json,
    scalar_to_json,
)

ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)


class Matrix:
    """An immutable matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[object]]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries: Sequence[object]) -> "Matrix":
        entries = [as_scalar(e) for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence[object]) -> "Matrix":
        return cls([[e] for e in entries])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.rows[i]

    def col(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else Matrix([])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = other.transpose().rows
            out = []
            for r in self.rows:
                out.append(
                    [_dot(r, c) for c in cols]
                )
            return Matrix(out)
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Matrix([[x * s for x in r] for r in self.rows])

    def __rmul__(self, other):
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Matrix([[s * x for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    # --- elimination ------------------------------------------------------

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row-echelon form with unit pivots; lowest-index pivoting."""
        rows = [list(r) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots: List[int] = []
        piv_r = 0
        for col in range(ncols):
            pivot_row = None
            for r in range(piv_r, nrows):
                if not rows[r][col].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            rows[piv_r], rows[pivot_row] = rows[pivot_row], rows[piv_r]
            inv = rows[piv_r][col].inverse()
            rows[piv_r] = [x * inv for x in rows[piv_r]]
            for r in range(nrows):
                if r == piv_r:
                    continue
                f = rows[r][col]
                if f.is_zero():
                    continue
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_r])]
            pivots.append(col)
            piv_r += 1
            if piv_r == nrows:
                break
        return Matrix(rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[Tuple[Scalar, ...]]:
        """Basis vectors of the null space, one per free column, in free-column
        order; the free coordinate is set to 1."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for fj in free:
            vec = [ZERO] * self.ncols
            vec[fj] = ONE
            for r, pj in enumerate(pivots):
                vec[pj] = -red.rows[r][fj]
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs: Sequence[object]) -> Optional[Tuple[Scalar, ...]]:
        """One exact solution of self * x = rhs, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        """
        rhs = [as_scalar(x) for x in rhs]
        if len(rhs) != self.nrows:
            raise ValueError("shape mismatch")
        if self.nrows == 0:
            return ()
        aug = Matrix([list(r) + [b] for r, b in zip(self.rows, rhs)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        sol = [ZERO] * self.ncols
        for r, pj in enumerate(pivots):
            sol[pj] = red.rows[r][self.ncols]
        return tuple(sol)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        n = self.nrows
        aug = Matrix(
            [
                list(self.rows[i]) + [ONE if i == j else ZERO for j in range(n)]
                for i in range(n)
            ]
        )
        red, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([r[n:] for r in red.rows])

    def is_invertible(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return self.rank() == self.nrows


def _dot(r, c):
    acc = None
    for a, b in zip(r, c):
        if a.is_zero() or b.is_zero():
            continue
        term = a * b
        acc = term if acc is None else acc + term
    return ZERO if acc is None else acc


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    nrows = blocks[0].nrows
    if any(b.nrows != nrows for b in blocks):
        raise ValueError("row counts differ")
    return Matrix(
        [[x for b in blocks for x in b.rows[i]] for i in range(nrows)]
    )


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    rows = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(rows)


def from_columns(columns: Sequence[Sequence[object]]) -> Matrix:
    return Matrix([[as_scalar(c) for c in col] for col in columns]).transpose()


def matrix_to_json(m: Matrix) -> list:
    return [[scalar_to_json(x) for x in row] for row in m.rows]


def matrix_from_json(rows: object) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("matrix JSON must be a list of row lists")
    return Matrix([[scalar_from_json(x) for x in r] for r in rows])
