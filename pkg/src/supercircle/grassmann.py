"""Exact Grassmann algebras with paired odd generators and an antilinear star.

Monomials are stored as bitmasks over the odd generators, optionally times a
Laurent monomial in declared invertible even generators (the group charts need
coordinates such as t, t^-1).  The star operation conjugates coefficients and
replaces every generator by a declared image; it extends multiplicatively, so
it is an algebra automorphism, not an antiautomorphism.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .scalars import (
    GaussianRational,
    Scalar,
    as_scalar,
    scalar_from_json,
    scalar_to_json,
)

Monomial = Tuple[Tuple[int, ...], int]  # (even exponents, odd bitmask)

EVEN = "even"
ODD = "odd"
INHOMOGENEOUS = "inhomogeneous"


class GeneratorSet:
    """Ordered odd generator names, an optional conjugation pairing, and
    optional invertible even generators.

    The pairing is an involution on odd indices marking conjugate pairs; fixed
    points are real generators.  Even generators have no default star; rings
    that need one install explicit images via with_star_images.
    """

    __slots__ = ("odd", "even", "pairing", "_star_odd", "_star_even")

    def __init__(
        self,
        odd: Sequence[str],
        pairing: Optional[Sequence[Sequence[int]]] = None,
        even: Sequence[str] = (),
    ):
        odd = tuple(odd)
        even = tuple(even)
        names = odd + even
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        if len(odd) > 62:
            raise ValueError("too many odd generators for bitmask monomials")
        perm: Optional[Tuple[int, ...]] = None
        if pairing is not None:
            table = list(range(len(odd)))
            for cycle in pairing:
                i, j = cycle
                if not (0 <= i < len(odd) and 0 <= j < len(odd)):
                    raise ValueError("pairing must be an involution on odd indices")
                table[i] = j
                table[j] = i
            perm = tuple(table)
            for i, j in enumerate(perm):
                if not 0 <= j < len(odd) or perm[j] != i:
                    raise ValueError("pairing must be an involution on odd indices")
        object.__setattr__(self, "odd", odd)
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "pairing", perm)
        object.__setattr__(self, "_star_odd", None)
        object.__setattr__(self, "_star_even", None)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSet is immutable")

    def signature(self) -> tuple:
        return (self.odd, self.even, self.pairing)

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self is other or self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        parts = [f"odd={list(self.odd)}"]
        if self.even:
            parts.append(f"even={list(self.even)}")
        if self.pairing is not None:
            parts.append(f"pairing={list(self.pairing)}")
        return f"GeneratorSet({', '.join(parts)})"

    def install_star_images(
        self,
        odd_images: Sequence["GrassmannElement"],
        even_images: Sequence["GrassmannElement"] = (),
    ) -> None:
        """Declare star images for every generator.

        Used by the group chart rings, where star is determined by the
        defining constraints rather than by a plain generator swap.
        """
        if len(odd_images) != len(self.odd):
            raise ValueError("need one star image per odd generator")
        if len(even_images) != len(self.even):
            raise ValueError("need one star image per even generator")
        for img in tuple(odd_images) + tuple(even_images):
            if img.gens != self:
                raise ValueError("star images must live in this algebra")
        object.__setattr__(self, "_star_odd", tuple(odd_images))
        object.__setattr__(self, "_star_even", tuple(even_images))

    def _odd_star_image(self, index: int) -> "GrassmannElement":
        if self._star_odd is not None:
            return self._star_odd[index]
        if self.pairing is not None:
            return self.odd_gen(self.odd[self.pairing[index]])
        raise ValueError("no pairing declared")

    def _even_star_image(self, index: int) -> "GrassmannElement":
        if self._star_even is not None:
            return self._star_even[index]
        raise ValueError(f"no star image declared for even generator {self.even[index]!r}")

    # --- element constructors -------------------------------------------

    def _unit_exps(self) -> Tuple[int, ...]:
        return (0,) * len(self.even)

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, {})

    def scalar(self, c) -> "GrassmannElement":
        c = as_scalar(c)
        if c.is_zero():
            return self.zero()
        return GrassmannElement(self, {(self._unit_exps(), 0): c})

    def one(self) -> "GrassmannElement":
        return self.scalar(1)

    def odd_gen(self, name: str) -> "GrassmannElement":
        idx = self.odd.index(name)
        return GrassmannElement(
            self, {(self._unit_exps(), 1 << idx): GaussianRational(1, 0)}
        )

    def even_gen(self, name: str, power: int = 1) -> "GrassmannElement":
        idx = self.even.index(name)
        exps = [0] * len(self.even)
        exps[idx] = power
        return GrassmannElement(self, {(tuple(exps), 0): GaussianRational(1, 0)})

    def element(self, terms: Mapping[Monomial, object]) -> "GrassmannElement":
        out: Dict[Monomial, Scalar] = {}
        for key, c in terms.items():
            c = as_scalar(c)
            if not c.is_zero():
                exps, mask = key
                out[(tuple(exps), mask)] = c
        return GrassmannElement(self, out)


def _merge_sign(left_mask: int, right_mask: int) -> int:
    """Parity of the shuffle that sorts the concatenation of two ascending
    monomials: each right generator moves past every larger left generator."""
    sign = 0
    mask = right_mask
    while mask:
        low = mask & -mask
        j = low.bit_length() - 1
        sign ^= (left_mask >> (j + 1)).bit_count() & 1
        mask ^= low
    return sign


class GrassmannElement:
    """A finitely supported map from monomials to nonzero scalars."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: Dict[Monomial, Scalar]):
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannElement is immutable")

    def _check_compatible(self, other: "GrassmannElement") -> None:
        if self.gens != other.gens:
            raise ValueError("mismatched generator sets")

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> Scalar:
        """Coefficient of the empty monomial."""
        return self.terms.get((self.gens._unit_exps(), 0), GaussianRational(0, 0))

    def soul(self) -> "GrassmannElement":
        unit = (self.gens._unit_exps(), 0)
        return GrassmannElement(
            self.gens, {k: v for k, v in self.terms.items() if k != unit}
        )

    def parity(self) -> str:
        if not self.terms:
            return EVEN
        parities = {mask.bit_count() & 1 for _, mask in self.terms}
        if parities == {0}:
            return EVEN
        if parities == {1}:
            return ODD
        return INHOMOGENEOUS

    def coefficient(self, key: Monomial) -> Scalar:
        return self.terms.get((tuple(key[0]), key[1]), GaussianRational(0, 0))

    # --- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return GrassmannElement(self.gens, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return GrassmannElement(self.gens, {k: -c for k, c in self.terms.items()})

    def _coerce(self, other) -> Optional["GrassmannElement"]:
        if isinstance(other, GrassmannElement):
            self._check_compatible(other)
            return other
        try:
            return self.gens.scalar(as_scalar(other))
        except TypeError:
            return None

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Scalar] = {}
        for (e1, m1), c1 in self.terms.items():
            for (e2, m2), c2 in other.terms.items():
                if m1 & m2:
                    continue
                c = c1 * c2
                if _merge_sign(m1, m2):
                    c = -c
                key = (tuple(a + b for a, b in zip(e1, e2)), m1 | m2)
                acc = out.get(key)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return GrassmannElement(self.gens, out)

    def __rmul__(self, other):
        # Scalars commute with everything; elements handle themselves in __mul__.
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = self.gens.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self) -> "GrassmannElement":
        """Multiplicative inverse of an even element with invertible even part.

        Writes x = u*(1 + v) with u a single invertible even monomial and v
        nilpotent; the geometric series for (1 + v)^-1 terminates after at
        most one step per odd generator.
        """
        p = self.parity()
        if p != EVEN:
            raise ValueError(f"cannot invert element of parity {p}")
        unit_terms = {k: c for k, c in self.terms.items() if k[1] == 0}
        if len(unit_terms) != 1:
            # A sum of distinct Laurent monomials has no Laurent-polynomial
            # inverse; the pure-Grassmann case lands here when the body is 0.
            raise ValueError("not invertible")
        ((exps, _mask), coef), = unit_terms.items()
        u_inv = GrassmannElement(
            self.gens,
            {(tuple(-e for e in exps), 0): coef.inverse()},
        )
        v = u_inv * GrassmannElement(
            self.gens, {k: c for k, c in self.terms.items() if k[1] != 0}
        )
        # (1 + v)^-1 = 1 - v + v^2 - ...; v is nilpotent of index at most
        # the number of odd generators plus one.
        result = self.gens.one()
        power = self.gens.one()
        for k in range(1, len(self.gens.odd) + 1):
            power = power * v
            if power.is_zero():
                break
            result = result + (-power if k % 2 else power)
        return result * u_inv

    def star(self) -> "GrassmannElement":
        """Antilinear algebra automorphism.

        Conjugates every coefficient and replaces each generator by its star
        image (the paired generator by default), multiplying images in the
        generator order of the monomial.
        """
        gens = self.gens
        out = gens.zero()
        for (exps, mask), c in self.terms.items():
            term = gens.scalar(c.conjugate())
            for idx, e in enumerate(exps):
                if e:
                    term = term * gens._even_star_image(idx) ** e
            m = mask
            while m:
                low = m & -m
                idx = low.bit_length() - 1
                term = term * gens._odd_star_image(idx)
                m ^= low
            out = out + term
        return out

    def __eq__(self, other):
        if isinstance(other, GrassmannElement):
            if self.gens != other.gens:
                return False
            if self.terms.keys() != other.terms.keys():
                return False
            return all(other.terms[k] == c for k, c in self.terms.items())
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self == self.gens.scalar(c)

    def __hash__(self):
        raise TypeError("GrassmannElement is unhashable; compare with ==")

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = []
        for (exps, mask) in sorted(self.terms, key=lambda k: (k[1].bit_count(), k)):
            c = self.terms[(exps, mask)]
            factors = []
            for idx, e in enumerate(exps):
                if e:
                    factors.append(f"{self.gens.even[idx]}^{e}" if e != 1 else self.gens.even[idx])
            m = mask
            while m:
                low = m & -m
                factors.append(self.gens.odd[low.bit_length() - 1])
                m ^= low
            mono = "*".join(factors) if factors else "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)

    # --- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        gens = self.gens
        obj: dict = {"gens": list(gens.odd)}
        if gens.pairing is not None:
            cycles = sorted({tuple(sorted((i, j))) for i, j in enumerate(gens.pairing) if i != j})
            obj["pairing"] = [list(c) for c in cycles]
        if gens.even:
            obj["evens"] = list(gens.even)
        terms = []
        for (exps, mask) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            entry: dict = {
                "mono": [i for i in range(len(gens.odd)) if mask >> i & 1],
                "coef": scalar_to_json(self.terms[(exps, mask)]),
            }
            if any(exps):
                entry["powers"] = list(exps)
            terms.append(entry)
        obj["terms"] = terms
        return obj


def element_from_json(obj, gens: Optional[GeneratorSet] = None) -> GrassmannElement:
    """Decode an element; reuse gens if supplied (they must agree)."""
    if not isinstance(obj, dict) or "gens" not in obj or "terms" not in obj:
        raise ValueError("malformed Grassmann element")
    decoded = GeneratorSet(
        obj["gens"],
        pairing=obj.get("pairing"),
        even=obj.get("evens", ()),
    )
    if gens is None:
        gens = decoded
    elif gens.signature() != decoded.signature():
        raise ValueError("generator sets disagree across entries")
    n_even = len(gens.even)
    terms: Dict[Monomial, Scalar] = {}
    for entry in obj["terms"]:
        mono = entry["mono"]
        mask = 0
        for i in mono:
            if not isinstance(i, int) or not 0 <= i < len(gens.odd):
                raise ValueError(f"monomial index {i!r} out of range")
            if mask >> i & 1:
                raise ValueError("repeated generator in monomial")
            mask |= 1 << i
        exps = tuple(entry.get("powers", (0,) * n_even))
        if len(exps) != n_even:
            raise ValueError("even exponent vector has wrong length")
        coef = scalar_from_json(entry["coef"])
        if not coef.is_zero():
            terms[(exps, mask)] = coef
    return GrassmannElement(gens, terms)


def multiply(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    return x * y


def star(x: GrassmannElement) -> GrassmannElement:
    return x.star()


def invert(x: GrassmannElement) -> GrassmannElement:
    return x.invert()


def parity(x: GrassmannElement) -> str:
    return x.parity()


def all_monomials(gens: GeneratorSet) -> Iterable[GrassmannElement]:
    """Every odd-generator monomial (without Laurent part), ascending mask."""
    unit = gens._unit_exps()
    for mask in range(1 << len(gens.odd)):
        yield GrassmannElement(gens, {(unit, mask): GaussianRational(1, 0)})
