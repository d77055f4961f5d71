"""Matrix coefficients as explicit function-algebra sections, and the exact
expansion of a section in those coefficients.

A section is a finite sum of terms t^m * mu where t is the circle coordinate
of the factorization chart, m an integer, and mu a monomial in the odd chart
coordinates (theta for the circle group, theta and eta for the unitary one).
Expansion solves one small exact linear system per weight and reports
whatever falls outside the coefficient span as an exact residual instead of
forcing it to zero.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .grassmann import _merge_sign
from .liealg import Representation, validate_representation
from .linalg import Matrix
from .reps import (
    make_V_m,
    make_adjoint_su11,
    make_pi_m,
    make_trivial,
    make_weight_zero_s11,
)
from .scalars import (
    FloatScalar,
    GaussianRational,
    Scalar,
    as_scalar,
    scalar_from_json,
    scalar_to_json,
)

ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)

ODD_COORDS = {"s11": ("theta",), "su11": ("theta", "eta")}

TermKey = Tuple[int, int]  # (weight, odd-coordinate bitmask)
Label = Tuple  # ("V", m) | ("pi", m) | ("trivial",) | ("adjoint",) | ("W",)


class Section:
    """A finitely supported function on the group chart.

    ``terms`` maps (weight, mask) to a nonzero scalar, where the mask selects
    odd coordinates by their index in ODD_COORDS[group].
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: str, terms: Mapping[TermKey, object]):
        if group not in ODD_COORDS:
            raise ValueError("unknown group tag %r" % (group,))
        limit = 1 << len(ODD_COORDS[group])
        clean: Dict[TermKey, Scalar] = {}
        for (m, mask), c in terms.items():
            if not isinstance(m, int) or isinstance(m, bool):
                raise ValueError("weights must be integers")
            if not 0 <= mask < limit:
                raise ValueError("odd monomial mask out of range")
            c = as_scalar(c)
            if not c.is_zero():
                clean[(m, mask)] = c
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Section is immutable")

    @classmethod
    def zero(cls, group: str) -> "Section":
        return cls(group, {})

    @classmethod
    def monomial(cls, group: str, m: int, names: Sequence[str] = (),
                 coef: object = 1) -> "Section":
        """t^m times the product of the named odd coordinates (canonical
        order), times coef."""
        coords = ODD_COORDS[group]
        mask = 0
        for name in names:
            idx = coords.index(name)
            if mask & (1 << idx):
                return cls.zero(group)
            mask |= 1 << idx
        return cls(group, {(m, mask): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: int, mask: int) -> Scalar:
        return self.terms.get((m, mask), ZERO)

    def weights(self) -> List[int]:
        return sorted({m for m, _ in self.terms})

    def weight_component(self, m: int) -> "Section":
        return Section(
            self.group,
            {k: c for k, c in self.terms.items() if k[0] == m},
        )

    def __add__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        if other.group != self.group:
            raise ValueError("sections live on different groups")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            acc = terms.get(k)
            terms[k] = c if acc is None else acc + c
        return Section(self.group, terms)

    def __sub__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Section(self.group, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Section):
            if other.group != self.group:
                raise ValueError("sections live on different groups")
            terms: Dict[TermKey, Scalar] = {}
            for (m1, mask1), c1 in self.terms.items():
                for (m2, mask2), c2 in other.terms.items():
                    if mask1 & mask2:
                        continue
                    key = (m1 + m2, mask1 | mask2)
                    term = c1 * c2
                    if _merge_sign(mask1, mask2):
                        term = -term
                    acc = terms.get(key)
                    terms[key] = term if acc is None else acc + term
            return Section(self.group, terms)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Section(self.group, {k: x * c for k, x in self.terms.items()})

    def __rmul__(self, other):
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Section(self.group, {k: c * x for k, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        coords = ODD_COORDS[self.group]
        parts = []
        for (m, mask), c in sorted(self.terms.items()):
            mono = "*".join(coords[i] for i in range(len(coords)) if mask & (1 << i))
            parts.append("(%s)*t^%d%s" % (c, m, ("*" + mono) if mono else ""))
        return "Section(%s)" % (" + ".join(parts) or "0")

    def to_json(self) -> dict:
        coords = ODD_COORDS[self.group]
        out = []
        for (m, mask), c in sorted(self.terms.items()):
            mono = [coords[i] for i in range(len(coords)) if mask & (1 << i)]
            out.append({"m": m, "mono": mono, "coef": scalar_to_json(c)})
        return {"group": self.group, "terms": out}


def section_from_json(obj: object) -> Section:
    if not isinstance(obj, dict):
        raise ValueError("section JSON must be an object")
    group = obj.get("group")
    if group not in ODD_COORDS:
        raise ValueError("unknown group tag %r" % (group,))
    raw = obj.get("terms")
    if not isinstance(raw, list):
        raise ValueError("missing terms list")
    coords = ODD_COORDS[group]
    terms: Dict[TermKey, Scalar] = {}
    for entry in raw:
        if not isinstance(entry, dict):
            raise ValueError("terms must be objects")
        m = entry.get("m")
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("term weight must be an integer")
        mono = entry.get("mono", [])
        mask = 0
        for name in mono:
            if name not in coords:
                raise ValueError("unknown odd coordinate %r" % (name,))
            idx = coords.index(name)
            if mask & (1 << idx):
                raise ValueError("repeated odd coordinate %r" % (name,))
            mask |= 1 << idx
        c = scalar_from_json(entry.get("coef"))
        key = (m, mask)
        acc = terms.get(key)
        terms[key] = c if acc is None else acc + c
    return Section(group, terms)


def matrix_coefficients(rep: Representation, group: Optional[str] = None,
                        ) -> Dict[Tuple[int, int], Section]:
    """Each entry (i, j) of the point action as a Section.

    The action on a factorized point is the weight action followed by one
    nilpotent factor per odd generator, in the factorization order; for the
    unitary group that expands to
    t^m * (delta + theta*U + eta*S + theta*eta*(U*S)) entrywise.
    """
    if group is not None and group != rep.algebra:
        raise ValueError("group tag %r does not match the representation" % (group,))
    problems = validate_representation(rep)
    if problems:
        raise ValueError("representation is not valid: " + "; ".join(problems))
    n = rep.dim
    out: Dict[Tuple[int, int], Section] = {}
    if rep.algebra == "s11":
        z = rep.odd["Z"]
        for i in range(n):
            for j in range(n):
                terms: Dict[TermKey, Scalar] = {}
                if i == j:
                    terms[(rep.weights[i], 0)] = ONE
                if not z[i, j].is_zero():
                    terms[(rep.weights[i], 1)] = z[i, j]
                out[(i, j)] = Section("s11", terms)
        return out
    u = rep.odd["U"]
    s = rep.odd["S"]
    us = u * s
    for i in range(n):
        for j in range(n):
            terms = {}
            if i == j:
                terms[(rep.weights[i], 0)] = ONE
            if not u[i, j].is_zero():
                terms[(rep.weights[i], 0b01)] = u[i, j]
            if not s[i, j].is_zero():
                terms[(rep.weights[i], 0b10)] = s[i, j]
            if not us[i, j].is_zero():
                terms[(rep.weights[i], 0b11)] = us[i, j]
            out[(i, j)] = Section("su11", terms)
    return out


class ExpansionResult:
    """Coefficients over (representation label, entry) plus an exact residual."""

    __slots__ = ("group", "coefficients", "residual")

    def __init__(self, group: str,
                 coefficients: Mapping[Tuple[Label, Tuple[int, int]], Scalar],
                 residual: Section):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coefficients", dict(coefficients))
        object.__setattr__(self, "residual", residual)

    def __setattr__(self, name, value):
        raise AttributeError("ExpansionResult is immutable")

    def to_json(self) -> dict:
        out = []
        for (label, entry), c in sorted(
            self.coefficients.items(), key=lambda kv: _label_sort_key(kv[0])
        ):
            out.append({
                "rep": _label_to_json(label),
                "entry": list(entry),
                "coef": scalar_to_json(c),
            })
        return {
            "group": self.group,
            "coefficients": out,
            "residual": self.residual.to_json(),
        }


def _label_sort_key(key):
    label, entry = key
    kind = label[0]
    if kind in ("V", "pi"):
        return (0, label[1], entry)
    if kind == "trivial":
        return (1, 0, entry)
    return (2, 0, entry)


def _label_to_json(label: Label) -> dict:
    kind = label[0]
    if kind == "V":
        return {"type": "V", "m": label[1]}
    if kind == "pi":
        return {"type": "pi", "m": label[1], "sign": "+"}
    return {"type": kind}


def _label_rep(label: Label, group: str, mode: str, tol: Optional[float],
               ) -> Representation:
    kind = label[0]
    if kind == "V":
        return make_V_m(label[1], mode=mode, tol=tol)
    if kind == "pi":
        return make_pi_m(label[1], "+", mode=mode, tol=tol)
    if kind == "trivial":
        return make_trivial(group, 1, 0)
    if kind == "adjoint" and group == "su11":
        return make_adjoint_su11()
    if kind == "W" and group == "s11":
        return make_weight_zero_s11("W")
    raise ValueError("unknown representation label %r" % (label,))


def _section_mode(f: Section) -> Tuple[str, Optional[float]]:
    tols = [c.tol for c in f.terms.values() if isinstance(c, FloatScalar)]
    if tols:
        return "float", max(tols)
    return "exact", None


def _entry_list(group: str) -> List[Tuple[int, int]]:
    # the row-major entries of the 1|1 weight block whose sections are
    # linearly independent (all four for su11, the first row for s11)
    if group == "su11":
        return [(0, 0), (0, 1), (1, 0), (1, 1)]
    return [(0, 0), (0, 1)]


def expand(f: Section) -> ExpansionResult:
    """Exact coefficients of f over the spanning matrix coefficients.

    Nonzero weights are solved against the weight-m irreducible block; the
    weight-zero component is read off against the trivial coefficient and
    the odd entries of the weight-zero indecomposable.  For the unitary
    group the weight-zero theta*eta monomial lies outside that span and is
    returned in the residual.
    """
    group = f.group
    mode, tol = _section_mode(f)
    coords = ODD_COORDS[group]
    masks = list(range(1 << len(coords)))
    coefficients: Dict[Tuple[Label, Tuple[int, int]], Scalar] = {}
    residual_terms: Dict[TermKey, Scalar] = {}

    for m in f.weights():
        if m == 0:
            _expand_weight_zero(f, coefficients, residual_terms)
            continue
        label: Label = ("pi", m) if group == "su11" else ("V", m)
        rep = _label_rep(label, group, mode, tol)
        sections = matrix_coefficients(rep)
        entries = _entry_list(group)
        system = Matrix([
            [sections[e].coefficient(m, mask) for e in entries]
            for mask in masks
        ])
        rhs = tuple(f.coefficient(m, mask) for mask in masks)
        sol = system.solve(rhs)
        if sol is None:
            raise ValueError("weight-%d system is singular" % m)
        for e, x in zip(entries, sol):
            if not x.is_zero():
                coefficients[(label, e)] = x

    return ExpansionResult(group, coefficients, Section(group, residual_terms))


def _expand_weight_zero(f: Section, coefficients, residual_terms) -> None:
    group = f.group
    c_unit = f.coefficient(0, 0)
    if not c_unit.is_zero():
        coefficients[(("trivial",), (0, 0))] = c_unit
    c_theta = f.coefficient(0, 0b01)
    if not c_theta.is_zero():
        if group == "su11":
            coefficients[(("adjoint",), (0, 1))] = c_theta
        else:
            coefficients[(("W",), (0, 1))] = c_theta
    if group == "su11":
        c_eta = f.coefficient(0, 0b10)
        if not c_eta.is_zero():
            coefficients[(("adjoint",), (0, 2))] = c_eta
        c_both = f.coefficient(0, 0b11)
        if not c_both.is_zero():
            residual_terms[(0, 0b11)] = c_both


def reconstruct(coefficients: Mapping[Tuple[Label, Tuple[int, int]], Scalar],
                group: str) -> Section:
    """The linear combination of matrix-coefficient sections; exact."""
    total = Section.zero(group)
    cache: Dict[Label, Dict[Tuple[int, int], Section]] = {}
    for (label, entry), c in coefficients.items():
        if label not in cache:
            mode = "float" if isinstance(c, FloatScalar) else "exact"
            tol = c.tol if isinstance(c, FloatScalar) else None
            cache[label] = matrix_coefficients(_label_rep(label, group, mode, tol))
        if entry not in cache[label]:
            raise ValueError("entry %r outside representation %r" % (entry, label))
        total = total + cache[label][entry] * c
    return total
