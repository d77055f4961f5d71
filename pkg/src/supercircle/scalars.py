"""Exact and approximate coefficient scalars.

Everything downstream computes over one of three scalar kinds: exact Gaussian
rationals, an exact quadratic extension of them by a formal square root of
-i*m, and tolerance-compared complex floats.  The extension parameter m is an
integer weight; values carrying different parameters never take part in the
same arithmetic (that is an error, not a coercion).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

RationalLike = Union[int, Fraction]


class ExtensionMismatchError(ValueError):
    """Arithmetic attempted between extensions with different parameters m."""


def _sign(m: int) -> int:
    return (m > 0) - (m < 0)


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


class GaussianRational:
    """An element re + i*im of Q(i) with exact rational components.

    Fractions keep themselves in lowest terms with positive denominator, so
    equality and hashing are structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_int(cls, n: int) -> "GaussianRational":
        return cls(n, 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = _coerce_gaussian(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def to_float(self, tol: Optional[float] = None) -> "FloatScalar":
        t = FloatScalar.DEFAULT_TOL if tol is None else tol
        return FloatScalar(float(self.re), float(self.im), t)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        op = "+" if self.im > 0 else "-"
        return f"{self.re} {op} {abs(self.im)}*i"


def _coerce_gaussian(x) -> Optional[GaussianRational]:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    return None


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


class ExtendedScalar:
    """c0 + c1*s over Q(i), where the formal generator s satisfies s*s = -i*m.

    For m = +-2k^2 the element -i*m already has a square root in Q(i), so the
    quotient ring Q(i)[s]/(s^2 + i*m) has zero divisors; sqrt_neg_im never
    produces an ExtendedScalar for such m.  Constructing one directly is still
    permitted, and inversion then falls back to substituting the explicit root
    when the rationalization denominator vanishes.

    Arithmetic demotes to GaussianRational whenever the s-component cancels,
    which keeps zeros parameter-free and lets block matrices over different
    weights coexist without illegal cross-extension arithmetic.
    """

    __slots__ = ("c0", "c1", "m")

    def __init__(self, c0, c1, m: int):
        g0 = _coerce_gaussian(c0)
        g1 = _coerce_gaussian(c1)
        if g0 is None or g1 is None:
            raise TypeError("ExtendedScalar components must be Gaussian rationals")
        if not isinstance(m, int) or isinstance(m, bool) or m == 0:
            raise ValueError("extension parameter m must be a nonzero integer")
        object.__setattr__(self, "c0", g0)
        object.__setattr__(self, "c1", g1)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedScalar is immutable")

    @staticmethod
    def make(c0, c1, m: int):
        """Build c0 + c1*s, demoted to GaussianRational if c1 = 0."""
        g1 = _coerce_gaussian(c1)
        if g1 is None:
            raise TypeError("ExtendedScalar components must be Gaussian rationals")
        if g1.is_zero():
            g0 = _coerce_gaussian(c0)
            if g0 is None:
                raise TypeError("ExtendedScalar components must be Gaussian rationals")
            return g0
        return ExtendedScalar(c0, g1, m)

    def _lift(self, other) -> Optional[tuple]:
        if isinstance(other, ExtendedScalar):
            if other.m != self.m:
                raise ExtensionMismatchError(
                    f"cannot mix extensions with parameters m={self.m} and m={other.m}"
                )
            return other.c0, other.c1
        g = _coerce_gaussian(other)
        if g is None:
            return None
        return g, ZERO

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def conjugate(self):
        """Complex conjugation; maps the extension for m onto the one for -m.

        Under the principal branch the conjugate of sqrt(-i*m) is exactly
        sqrt(+i*m) = sqrt(-i*(-m)), so the result lives at parameter -m.
        """
        return ExtendedScalar.make(self.c0.conjugate(), self.c1.conjugate(), -self.m)

    def inverse(self):
        # (c0 + c1 s)(c0 - c1 s) = c0^2 + i*m*c1^2, which is Gaussian rational.
        den = self.c0 * self.c0 + GaussianRational(0, self.m) * self.c1 * self.c1
        if not den.is_zero():
            return ExtendedScalar.make(self.c0 / den, -(self.c1 / den), self.m)
        root = _exact_root_neg_im(self.m)
        if root is None or self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)[s]")
        # Zero denominator forces m = +-2k^2; substitute the explicit root.
        value = self.c0 + self.c1 * root
        if value.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)[s]")
        return value.inverse()

    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        return ExtendedScalar.make(self.c0 + b0, self.c1 + b1, self.m)

    __radd__ = __add__

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        return ExtendedScalar.make(self.c0 - b0, self.c1 - b1, self.m)

    def __rsub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        return ExtendedScalar.make(b0 - self.c0, b1 - self.c1, self.m)

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        s_squared = GaussianRational(0, -self.m)
        return ExtendedScalar.make(
            self.c0 * b0 + self.c1 * b1 * s_squared,
            self.c0 * b1 + self.c1 * b0,
            self.m,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        return self * ExtendedScalar.make(b0, b1, self.m).inverse()

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        b0, b1 = lifted
        return ExtendedScalar.make(b0, b1, self.m) * self.inverse()

    def __neg__(self):
        return ExtendedScalar(-self.c0, -self.c1, self.m)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, ExtendedScalar):
            return self.m == other.m and self.c0 == other.c0 and self.c1 == other.c1
        g = _coerce_gaussian(other)
        if g is None:
            return NotImplemented
        return self.c1.is_zero() and self.c0 == g

    def __hash__(self):
        return hash((self.c0, self.c1, self.m))

    def to_complex(self) -> complex:
        return self.c0.to_complex() + self.c1.to_complex() * _float_root_neg_im(self.m)

    def to_float(self, tol: Optional[float] = None) -> "FloatScalar":
        t = FloatScalar.DEFAULT_TOL if tol is None else tol
        z = self.to_complex()
        return FloatScalar(z.real, z.imag, t)

    def __repr__(self):
        return f"ExtendedScalar({self.c0!r}, {self.c1!r}, {self.m})"

    def __str__(self):
        return f"({self.c0}) + ({self.c1})*s[{self.m}]"


class FloatScalar:
    """A complex double with componentwise comparison tolerance."""

    __slots__ = ("re", "im", "tol")

    DEFAULT_TOL = 1e-9

    def __init__(self, re: float = 0.0, im: float = 0.0, tol: float = DEFAULT_TOL):
        object.__setattr__(self, "re", float(re))
        object.__setattr__(self, "im", float(im))
        object.__setattr__(self, "tol", float(tol))

    def __setattr__(self, name, value):
        raise AttributeError("FloatScalar is immutable")

    @classmethod
    def from_exact(cls, x, tol: float = DEFAULT_TOL) -> "FloatScalar":
        return cls(*_complex_parts(x), tol)

    def _coerce(self, other) -> Optional["FloatScalar"]:
        if isinstance(other, FloatScalar):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, float, Fraction)):
            return FloatScalar(float(other), 0.0, self.tol)
        if isinstance(other, (GaussianRational, ExtendedScalar)):
            return other.to_float(self.tol)
        return None

    def is_zero(self) -> bool:
        return abs(self.re) <= self.tol and abs(self.im) <= self.tol

    def conjugate(self) -> "FloatScalar":
        return FloatScalar(self.re, -self.im, self.tol)

    def inverse(self) -> "FloatScalar":
        n = self.re * self.re + self.im * self.im
        if n == 0.0:
            raise ZeroDivisionError("division by zero")
        return FloatScalar(self.re / n, -self.im / n, self.tol)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FloatScalar(self.re + o.re, self.im + o.im, max(self.tol, o.tol))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FloatScalar(self.re - o.re, self.im - o.im, max(self.tol, o.tol))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FloatScalar(o.re - self.re, o.im - self.im, max(self.tol, o.tol))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FloatScalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            max(self.tol, o.tol),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FloatScalar(-self.re, -self.im, self.tol)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = max(self.tol, o.tol)
        return abs(self.re - o.re) <= t and abs(self.im - o.im) <= t

    __hash__ = None  # tolerance-based equality is incompatible with hashing

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self):
        return f"FloatScalar({self.re!r}, {self.im!r}, tol={self.tol!r})"


Scalar = Union[GaussianRational, ExtendedScalar, FloatScalar]


def _complex_parts(x) -> tuple:
    if isinstance(x, (GaussianRational, ExtendedScalar)):
        z = x.to_complex()
        return z.real, z.imag
    if isinstance(x, FloatScalar):
        return x.re, x.im
    if isinstance(x, (int, float, Fraction)):
        return float(x), 0.0
    raise TypeError(f"cannot interpret {type(x).__name__} as a complex scalar")


def _exact_root_neg_im(m: int) -> Optional[GaussianRational]:
    """The Gaussian-rational square root of -i*m, or None if there is none.

    -i*m is a perfect square in Q(i) exactly when |m| = 2k^2, with root
    k*(1 - i*sign(m)).
    """
    half = abs(m) // 2
    k = math.isqrt(half)
    if abs(m) != 2 * k * k:
        return None
    return GaussianRational(k, -k * _sign(m))


def _float_root_neg_im(m: int) -> complex:
    q = math.sqrt(abs(m) / 2.0)
    return complex(q, -q * _sign(m))


def sqrt_neg_im(m: int, mode: str = "exact") -> Scalar:
    """A scalar s with s*s = -i*m.

    Exact mode returns the Gaussian-rational root k*(1 - i*sign(m)) when
    |m| = 2k^2 (then the extension would degenerate and is avoided so that all
    exact arithmetic stays inside a field), and the formal ExtendedScalar
    generator otherwise.  Float mode returns the principal branch
    sqrt(|m|/2)*(1 - i*sign(m)).
    """
    if m == 0:
        raise ValueError("degenerate weight")
    if mode == "float":
        z = _float_root_neg_im(m)
        return FloatScalar(z.real, z.imag)
    if mode != "exact":
        raise ValueError(f"unknown scalar mode {mode!r}")
    root = _exact_root_neg_im(m)
    if root is not None:
        return root
    return ExtendedScalar(ZERO, ONE, m)


def invert_extended(x):
    """Multiplicative inverse of an exact scalar.

    For a proper extension element the inverse is the rationalization
    (c0 - c1*s)/(c0^2 + i*m*c1^2).  If that denominator vanishes (possible only
    when |m| = 2k^2) the explicit root is substituted for s and the resulting
    Gaussian rational is inverted; elements annihilated by the substitution are
    genuine zero divisors and raise ZeroDivisionError.
    """
    if isinstance(x, ExtendedScalar):
        return x.inverse()
    g = _coerce_gaussian(x)
    if g is not None:
        return g.inverse()
    if isinstance(x, FloatScalar):
        return x.inverse()
    raise TypeError(f"cannot invert {type(x).__name__}")


def scalar_to_json(x) -> dict:
    if isinstance(x, GaussianRational):
        return {"re": str(x.re), "im": str(x.im)}
    if isinstance(x, ExtendedScalar):
        return {
            "c0": scalar_to_json(x.c0),
            "c1": scalar_to_json(x.c1),
            "m": x.m,
        }
    if isinstance(x, FloatScalar):
        return {"re": x.re, "im": x.im}
    g = _coerce_gaussian(x)
    if g is not None:
        return scalar_to_json(g)
    raise TypeError(f"cannot encode {type(x).__name__}")


def scalar_from_json(obj) -> Scalar:
    if not isinstance(obj, dict):
        raise ValueError(f"malformed scalar: {obj!r}")
    if set(obj) == {"c0", "c1", "m"}:
        c0 = scalar_from_json(obj["c0"])
        c1 = scalar_from_json(obj["c1"])
        if not isinstance(c0, GaussianRational) or not isinstance(c1, GaussianRational):
            raise ValueError("extension components must be Gaussian rationals")
        m = obj["m"]
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("extension parameter must be an integer")
        return ExtendedScalar.make(c0, c1, m)
    if set(obj) == {"re", "im"}:
        re, im = obj["re"], obj["im"]
        if isinstance(re, str) and isinstance(im, str):
            return GaussianRational(Fraction(re), Fraction(im))
        if isinstance(re, (int, float)) and isinstance(im, (int, float)):
            return FloatScalar(float(re), float(im))
        raise ValueError(f"malformed scalar components: {obj!r}")
    raise ValueError(f"malformed scalar: {obj!r}")


def as_scalar(x) -> Scalar:
    """Coerce ints and Fractions to GaussianRational; pass scalars through."""
    if isinstance(x, (GaussianRational, ExtendedScalar, FloatScalar)):
        return x
    g = _coerce_gaussian(x)
    if g is None:
        raise TypeError(f"cannot interpret {type(x).__name__} as a scalar")
    return g
