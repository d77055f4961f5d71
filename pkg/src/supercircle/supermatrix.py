"""Graded (p|q) matrices over a Grassmann algebra.

Row and column indices below pdim belong to the even sector, the rest to the
odd sector.  An even matrix has even entries on the diagonal blocks and odd
entries off them; an odd matrix the reverse.  Zero entries are compatible
with either requirement.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .grassmann import EVEN, ODD, GeneratorSet, GrassmannElement, element_from_json
from .scalars import as_scalar


class SuperMatrix:
    __slots__ = ("pdim", "qdim", "rows")

    def __init__(self, pdim: int, qdim: int, entries: Sequence[Sequence[GrassmannElement]]):
        if pdim < 0 or qdim < 0 or pdim + qdim == 0:
            raise ValueError("need nonnegative block dimensions, not both zero")
        n = pdim + qdim
        rows = tuple(tuple(r) for r in entries)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} entry grid")
        gens = rows[0][0].gens
        for r in rows:
            for x in r:
                if not isinstance(x, GrassmannElement):
                    raise TypeError("entries must be GrassmannElements")
                if x.gens != gens:
                    raise ValueError("entries must share one generator set")
        object.__setattr__(self, "pdim", pdim)
        object.__setattr__(self, "qdim", qdim)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMatrix is immutable")

    @property
    def gens(self) -> GeneratorSet:
        return self.rows[0][0].gens

    @property
    def dim(self) -> int:
        return self.pdim + self.qdim

    @classmethod
    def from_scalar_grid(cls, gens: GeneratorSet, pdim: int, qdim: int,
                         grid: Sequence[Sequence[object]]) -> "SuperMatrix":
        return cls(
            pdim, qdim,
            [[gens.scalar(as_scalar(x)) for x in row] for row in grid],
        )

    @classmethod
    def identity(cls, gens: GeneratorSet, pdim: int, qdim: int) -> "SuperMatrix":
        n = pdim + qdim
        return cls(
            pdim, qdim,
            [[gens.one() if i == j else gens.zero() for j in range(n)] for i in range(n)],
        )

    def _sector(self, i: int) -> int:
        return 0 if i < self.pdim else 1

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def _check_same_shape(self, other: "SuperMatrix") -> None:
        if (self.pdim, self.qdim) != (other.pdim, other.qdim):
            raise ValueError("block dimension mismatch")
        if self.gens != other.gens:
            raise ValueError("mismatched generator sets")

    def __add__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return SuperMatrix(
            self.pdim, self.qdim,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SuperMatrix(self.pdim, self.qdim, [[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            self._check_same_shape(other)
            n = self.dim
            z = self.gens.zero()
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = z
                    for k in range(n):
                        # Entry order is preserved; Grassmann products care.
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return SuperMatrix(self.pdim, self.qdim, out)
        if isinstance(other, GrassmannElement):
            return SuperMatrix(
                self.pdim, self.qdim, [[x * other for x in r] for r in self.rows]
            )
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return SuperMatrix(self.pdim, self.qdim, [[x * s for x in r] for r in self.rows])

    def __rmul__(self, other):
        if isinstance(other, GrassmannElement):
            return SuperMatrix(
                self.pdim, self.qdim, [[other * x for x in r] for r in self.rows]
            )
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return SuperMatrix(self.pdim, self.qdim, [[s * x for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if (self.pdim, self.qdim) != (other.pdim, other.qdim):
            return False
        return all(a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    __hash__ = None

    def _matches_parity(self, diagonal_parity: str) -> bool:
        other = ODD if diagonal_parity == EVEN else EVEN
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x.is_zero():
                    continue
                want = diagonal_parity if self._sector(i) == self._sector(j) else other
                if x.parity() != want:
                    return False
        return True

    def is_even(self) -> bool:
        return self._matches_parity(EVEN)

    def is_odd(self) -> bool:
        return self._matches_parity(ODD)

    def parity(self) -> Optional[str]:
        even = self.is_even()
        odd = self.is_odd()
        if even and odd:
            return EVEN  # the zero matrix
        if even:
            return EVEN
        if odd:
            return ODD
        return None

    def star(self) -> "SuperMatrix":
        return SuperMatrix(self.pdim, self.qdim, [[x.star() for x in r] for r in self.rows])

    def to_json(self) -> dict:
        return {
            "pdim": self.pdim,
            "qdim": self.qdim,
            "entries": [[x.to_json() for x in r] for r in self.rows],
        }

    def __repr__(self):
        body = "; ".join(", ".join(repr(x) for x in r) for r in self.rows)
        return f"SuperMatrix({self.pdim}|{self.qdim}: [{body}])"


def supermatrix_from_json(obj, gens: Optional[GeneratorSet] = None) -> SuperMatrix:
    if not isinstance(obj, dict) or not {"pdim", "qdim", "entries"} <= set(obj):
        raise ValueError("malformed SuperMatrix")
    entries = []
    for row in obj["entries"]:
        out_row = []
        for cell in row:
            elem = element_from_json(cell, gens=gens)
            gens = elem.gens
            out_row.append(elem)
        entries.append(out_row)
    return SuperMatrix(obj["pdim"], obj["qdim"], entries)


def multiply(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    return a * b


def supercommutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """[x, y] = xy - (-1)^{|x||y|} yx for homogeneous x and y."""
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise ValueError("supercommutator needs homogeneous matrices")
    if px == ODD and py == ODD:
        return x * y + y * x
    return x * y - y * x


def berezinian(a: SuperMatrix) -> GrassmannElement:
    """Ber of an even (1|1) matrix [[a, beta], [gamma, d]]: d^-1*(a - beta*d^-1*gamma)."""
    if (a.pdim, a.qdim) != (1, 1):
        raise ValueError("berezinian implemented for (1|1) blocks only")
    if not a.is_even():
        raise ValueError("berezinian needs an even matrix")
    d_inv = a.rows[1][1].invert()
    return d_inv * (a.rows[0][0] - a.rows[0][1] * d_inv * a.rows[1][0])


def inverse_1_1(g: SuperMatrix) -> SuperMatrix:
    """Inverse of an even invertible (1|1) supermatrix, blockwise."""
    if (g.pdim, g.qdim) != (1, 1):
        raise ValueError("inverse implemented for (1|1) blocks only")
    a, beta = g.rows[0]
    gamma, d = g.rows[1]
    d_inv = d.invert()
    a_inv = a.invert()
    x = (a - beta * d_inv * gamma).invert()
    w = (d - gamma * a_inv * beta).invert()
    return SuperMatrix(
        1, 1,
        [
            [x, -(a_inv * beta * w)],
            [-(d_inv * gamma * x), w],
        ],
    )
