"""Structure-constant tables for the two Lie superalgebras and the
machinery that checks a proposed representation against them.

The even generator acts diagonally with purely imaginary integer eigenvalues,
so a representation never stores its matrix: the integer weight vector is the
matrix.  Everything else (the odd generators) is stored explicitly and checked
against the bracket table.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .grassmann import GeneratorSet
from .linalg import Matrix, matrix_from_json, matrix_to_json
from .scalars import FloatScalar, GaussianRational, Scalar
from .supermatrix import SuperMatrix

ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)

ODD_GENERATORS = {"s11": ("Z",), "su11": ("U", "S")}


class LieSuperAlgebra:
    """A finite-dimensional Lie superalgebra given by structure constants.

    ``brackets`` maps a pair of basis indices (i, j) to the coefficient
    vector of [x_i, x_j]; omitted pairs bracket to zero.  Construction
    validates super-antisymmetry and the graded Jacobi identity, so a
    successfully built instance is always a genuine Lie superalgebra.
    """

    __slots__ = ("names", "parities", "brackets", "defining")

    def __init__(
        self,
        names: Sequence[str],
        parities: Sequence[int],
        brackets: Mapping[Tuple[int, int], Sequence[int]],
        defining: Optional[Mapping[str, SuperMatrix]] = None,
    ):
        names = tuple(names)
        parities = tuple(int(p) % 2 for p in parities)
        if len(names) != len(parities):
            raise ValueError("names and parities must have equal length")
        n = len(names)
        table: Dict[Tuple[int, int], Tuple[int, ...]] = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("bracket index out of range")
            vec = tuple(int(c) for c in vec)
            if len(vec) != n:
                raise ValueError("bracket coefficient vector has wrong length")
            if any(vec):
                table[(i, j)] = vec
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "parities", parities)
        object.__setattr__(self, "brackets", table)
        object.__setattr__(self, "defining", dict(defining) if defining else None)
        self._check_antisymmetry()
        self._check_jacobi()

    def __setattr__(self, name, value):
        raise AttributeError("LieSuperAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket(self, i: int, j: int) -> Tuple[int, ...]:
        return self.brackets.get((i, j), (0,) * self.dim)

    def _bracket_vec(self, i: int, vec: Sequence[int]) -> Tuple[int, ...]:
        """[x_i, v] for a coefficient vector v, extended bilinearly."""
        out = [0] * self.dim
        for j, c in enumerate(vec):
            if c:
                for k, b in enumerate(self.bracket(i, j)):
                    out[k] += c * b
        return tuple(out)

    def _check_antisymmetry(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(n):
                sign = -1 if (self.parities[i] and self.parities[j]) else 1
                lhs = self.bracket(i, j)
                rhs = self.bracket(j, i)
                if any(a + sign * b for a, b in zip(lhs, rhs)):
                    raise ValueError(
                        "structure constants are not super-antisymmetric "
                        "at (%s, %s)" % (self.names[i], self.names[j])
                    )

    def _check_jacobi(self) -> None:
        n = self.dim
        p = self.parities
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    s1 = -1 if (p[i] and p[k]) else 1
                    s2 = -1 if (p[j] and p[i]) else 1
                    s3 = -1 if (p[k] and p[j]) else 1
                    t1 = self._bracket_vec(i, self.bracket(j, k))
                    t2 = self._bracket_vec(j, self.bracket(k, i))
                    t3 = self._bracket_vec(k, self.bracket(i, j))
                    total = [
                        s1 * a + s2 * b + s3 * c
                        for a, b, c in zip(t1, t2, t3)
                    ]
                    if any(total):
                        raise ValueError(
                            "graded Jacobi identity fails at (%s, %s, %s)"
                            % (self.names[i], self.names[j], self.names[k])
                        )

    def __repr__(self):
        return "LieSuperAlgebra(%r)" % (self.names,)


def _su11_defining() -> Dict[str, SuperMatrix]:
    gens = GeneratorSet([])
    i = GaussianRational(0, 1)
    grid = lambda rows: SuperMatrix.from_scalar_grid(gens, 1, 1, rows)
    return {
        "C": grid([[i, 0], [0, i]]),
        "U": grid([[0, 1], [-i, 0]]),
        "S": grid([[0, i], [-1, 0]]),
    }


def builtin_algebra(tag: str) -> LieSuperAlgebra:
    """The two built-in tables, keyed by the group they differentiate.

    ``s11``: basis (C, Z), C even and central, [Z, Z] = -2C.
    ``su11``: basis (C, U, S), C central, [U, U] = [S, S] = -2C, [U, S] = 0,
    with the defining 2x2 matrices attached.
    """
    if tag == "s11":
        return LieSuperAlgebra(
            ("C", "Z"), (0, 1), {(1, 1): (-2, 0)}
        )
    if tag == "su11":
        return LieSuperAlgebra(
            ("C", "U", "S"),
            (0, 1, 1),
            {(1, 1): (-2, 0, 0), (2, 2): (-2, 0, 0)},
            defining=_su11_defining(),
        )
    raise ValueError("unknown algebra tag %r" % (tag,))


class Representation:
    """A finite-dimensional representation of one of the built-in algebras.

    The central even generator acts as diag(i * weights[j]); only the odd
    generator matrices are stored.  Matrices act on column vectors, so column
    j of ``odd[name]`` is the image of basis vector j.
    """

    __slots__ = ("algebra", "parities", "weights", "odd")

    def __init__(
        self,
        algebra: str,
        parities: Sequence[int],
        weights: Sequence[int],
        odd: Mapping[str, Matrix],
    ):
        if algebra not in ODD_GENERATORS:
            raise ValueError("unknown algebra tag %r" % (algebra,))
        parities = tuple(int(p) % 2 for p in parities)
        weights = tuple(weights)
        if any(not isinstance(m, int) for m in weights):
            raise ValueError("weights must be integers")
        if len(parities) != len(weights):
            raise ValueError("parity and weight vectors must have equal length")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "parities", parities)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "odd", dict(odd))

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def generator_names(self) -> Tuple[str, ...]:
        return ODD_GENERATORS[self.algebra]

    def generator(self, name: str) -> Matrix:
        return self.odd[name]

    def weight_action(self) -> Matrix:
        """The diagonal matrix by which the even generator acts."""
        return Matrix.diagonal([GaussianRational(0, m) for m in self.weights])

    def restrict(self, indices: Sequence[int]) -> "Representation":
        """The subrepresentation spanned by the listed basis indices.

        Only meaningful when the span is actually invariant; the caller is
        expected to pass a union of weight blocks.
        """
        idx = tuple(indices)
        odd = {
            name: Matrix([[m[i, j] for j in idx] for i in idx])
            for name, m in self.odd.items()
        }
        return Representation(
            self.algebra,
            [self.parities[i] for i in idx],
            [self.weights[i] for i in idx],
            odd,
        )

    def is_float(self) -> bool:
        return any(
            isinstance(x, FloatScalar)
            for m in self.odd.values()
            for row in m.rows
            for x in row
        )

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.parities == other.parities
            and self.weights == other.weights
            and self.odd == other.odd
        )

    __hash__ = None

    def __repr__(self):
        return "Representation(%r, dim=%d|%d)" % (
            self.algebra,
            sum(1 for p in self.parities if p == 0),
            sum(1 for p in self.parities if p == 1),
        )

    def to_json(self) -> dict:
        out = {
            "algebra": self.algebra,
            "basis": [
                {"parity": p, "weight": m}
                for p, m in zip(self.parities, self.weights)
            ],
        }
        for name in self.generator_names:
            out[name] = matrix_to_json(self.odd[name])
        return out


def representation_from_json(obj: object) -> Representation:
    if not isinstance(obj, dict):
        raise ValueError("representation JSON must be an object")
    algebra = obj.get("algebra")
    if algebra not in ODD_GENERATORS:
        raise ValueError("unknown algebra tag %r" % (algebra,))
    basis = obj.get("basis")
    if not isinstance(basis, list):
        raise ValueError("missing basis list")
    parities = []
    weights = []
    for entry in basis:
        if not isinstance(entry, dict):
            raise ValueError("basis entries must be objects")
        p = entry.get("parity")
        m = entry.get("weight")
        if p not in (0, 1):
            raise ValueError("basis parity must be 0 or 1")
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("basis weight must be an integer")
        parities.append(p)
        weights.append(m)
    odd = {}
    for name in ODD_GENERATORS[algebra]:
        if name not in obj:
            raise ValueError("missing generator matrix %s" % name)
        mat = matrix_from_json(obj[name])
        if mat.shape != (len(basis), len(basis)):
            raise ValueError("generator %s has wrong shape" % name)
        odd[name] = mat
    return Representation(algebra, parities, weights, odd)


def _first_nonzero_violation(diff: Matrix, weights, relation: str) -> Optional[str]:
    for i, row in enumerate(diff.rows):
        for j, x in enumerate(row):
            if not x.is_zero():
                return "%s at weight block m=%d (entry (%d,%d))" % (
                    relation,
                    weights[i],
                    i,
                    j,
                )
    return None


def validate_representation(rep: Representation) -> List[str]:
    """All violated defining relations, as human-readable strings.

    An empty list means the data is a genuine representation.  The checks,
    in order: matrix shapes, odd parity structure, weight preservation
    (equivalently, commutation with the central generator), and the bracket
    relations including the su11 anticommutator and its diagonal square.
    """
    problems: List[str] = []
    n = rep.dim
    for name in rep.generator_names:
        mat = rep.odd.get(name)
        if mat is None:
            problems.append("missing generator matrix %s" % name)
            continue
        if mat.shape != (n, n):
            problems.append(
                "generator %s has shape %dx%d, expected %dx%d"
                % (name, mat.nrows, mat.ncols, n, n)
            )
    if problems:
        return problems

    for name in rep.generator_names:
        mat = rep.odd[name]
        for i in range(n):
            for j in range(n):
                if mat[i, j].is_zero():
                    continue
                if rep.parities[i] == rep.parities[j]:
                    problems.append(
                        "generator %s entry (%d,%d) connects equal parities"
                        % (name, i, j)
                    )
                if rep.weights[i] != rep.weights[j]:
                    problems.append(
                        "generator %s entry (%d,%d) connects weights %d and %d"
                        % (name, i, j, rep.weights[i], rep.weights[j])
                    )
    if problems:
        return problems

    # diag(-i*m): the required square of every odd generator
    minus_ic = Matrix.diagonal([GaussianRational(0, -m) for m in rep.weights])
    for name in rep.generator_names:
        mat = rep.odd[name]
        msg = _first_nonzero_violation(
            mat * mat - minus_ic, rep.weights, "%s^2 != -i*m" % name
        )
        if msg:
            problems.append(msg)

    if rep.algebra == "su11":
        u = rep.odd["U"]
        s = rep.odd["S"]
        msg = _first_nonzero_violation(
            u * s + s * u, rep.weights, "U*S + S*U != 0"
        )
        if msg:
            problems.append(msg)
        m_sq = Matrix.diagonal(
            [GaussianRational(m * m, 0) for m in rep.weights]
        )
        us = u * s
        msg = _first_nonzero_violation(
            us * us - m_sq, rep.weights, "(U*S)^2 != m^2"
        )
        if msg:
            problems.append(msg)
    return problems


def find_even_intertwiners(
    rep1: Representation, rep2: Representation
) -> List[Matrix]:
    """A basis for the even maps F with F.r1(X) = r2(X).F for all generators.

    F is supported on entries whose row and column agree in parity and in
    weight; everything else is forced to zero by evenness and by commutation
    with the central generator, so those entries are not unknowns at all.
    The remaining linear system is solved exactly and the kernel basis is
    returned as a list of dim(rep2) x dim(rep1) matrices.
    """
    if rep1.algebra != rep2.algebra:
        raise ValueError("representations live over different algebras")
    if rep1.is_float() != rep2.is_float():
        raise ValueError("scalar field mismatch between representations")
    n1, n2 = rep1.dim, rep2.dim
    unknowns = [
        (i, j)
        for i in range(n2)
        for j in range(n1)
        if rep2.parities[i] == rep1.parities[j]
        and rep2.weights[i] == rep1.weights[j]
    ]
    if not unknowns:
        return []
    index = {pos: k for k, pos in enumerate(unknowns)}

    rows: List[List[Scalar]] = []
    for name in rep1.generator_names:
        x1 = rep1.odd[name]
        x2 = rep2.odd[name]
        for r in range(n2):
            for c in range(n1):
                row = [ZERO] * len(unknowns)
                touched = False
                for j in range(n1):
                    if (r, j) in index and not x1[j, c].is_zero():
                        row[index[(r, j)]] = row[index[(r, j)]] + x1[j, c]
                        touched = True
                for i in range(n2):
                    if (i, c) in index and not x2[r, i].is_zero():
                        row[index[(i, c)]] = row[index[(i, c)]] - x2[r, i]
                        touched = True
                if touched:
                    rows.append(row)

    if rows:
        kernel = Matrix(rows).kernel_basis()
    else:
        kernel = tuple(
            tuple(ONE if k == t else ZERO for k in range(len(unknowns)))
            for t in range(len(unknowns))
        )

    basis = []
    for vec in kernel:
        grid = [[ZERO] * n1 for _ in range(n2)]
        for (i, j), k in index.items():
            grid[i][j] = vec[k]
        basis.append(Matrix(grid))
    return basis
