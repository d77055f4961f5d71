"""T-points of the 1|1 matrix supergroups: defining involutions, membership
predicates, generic symbolic points, and the unique factorization of a
unitary point into a circle factor and two odd exponential factors.

Every identity here is decided by normal-form comparison in an explicit
coordinate ring.  The constrained rings eliminate the conjugate variables
(star images are installed on the generators), so the group relations hold
identically rather than modulo an ideal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .grassmann import GeneratorSet, GrassmannElement, element_from_json
from .scalars import GaussianRational
from .supermatrix import SuperMatrix, berezinian, inverse_1_1

ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2), 0)

GROUPS = ("sl11", "su11", "su11_minus")


class GL11Point:
    """An invertible even 2x2 T-point [[a, beta], [gamma, d]].

    a and d are even with invertible even parts; beta and gamma are odd.
    Construction checks the parities and the invertibility, so membership
    predicates only ever have to test relations.
    """

    __slots__ = ("a", "beta", "gamma", "d")

    def __init__(self, a: GrassmannElement, beta: GrassmannElement,
                 gamma: GrassmannElement, d: GrassmannElement):
        gens = a.gens
        for name, x in (("a", a), ("beta", beta), ("gamma", gamma), ("d", d)):
            if x.gens != gens:
                raise ValueError("entries live over different generator sets")
        for name, x in (("a", a), ("d", d)):
            if x.parity() != "even":
                raise ValueError("entry %s must be even" % name)
            x.invert()  # raises if the even part is not a unit
        for name, x in (("beta", beta), ("gamma", gamma)):
            if not x.is_zero() and x.parity() != "odd":
                raise ValueError("entry %s must be odd" % name)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("GL11Point is immutable")

    @classmethod
    def identity(cls, gens: GeneratorSet) -> "GL11Point":
        one, zero = gens.one(), gens.zero()
        return cls(one, zero, zero, one)

    @classmethod
    def from_matrix(cls, m: SuperMatrix) -> "GL11Point":
        if (m.pdim, m.qdim) != (1, 1):
            raise ValueError("need a 1|1 supermatrix")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def matrix(self) -> SuperMatrix:
        return SuperMatrix(1, 1, [[self.a, self.beta], [self.gamma, self.d]])

    def multiply(self, other: "GL11Point") -> "GL11Point":
        return GL11Point.from_matrix(self.matrix() * other.matrix())

    def inverse(self) -> "GL11Point":
        return GL11Point.from_matrix(inverse_1_1(self.matrix()))

    def __eq__(self, other):
        if not isinstance(other, GL11Point):
            return NotImplemented
        return (
            self.a == other.a
            and self.beta == other.beta
            and self.gamma == other.gamma
            and self.d == other.d
        )

    __hash__ = None

    def __repr__(self):
        return "GL11Point(%r, %r, %r, %r)" % (self.a, self.beta, self.gamma, self.d)

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "d": self.d.to_json(),
        }


def point_from_json(obj: object, gens: Optional[GeneratorSet] = None) -> GL11Point:
    if not isinstance(obj, dict):
        raise ValueError("point JSON must be an object")
    entries = {}
    for name in ("a", "beta", "gamma", "d"):
        if name not in obj:
            raise ValueError("point JSON is missing entry %r" % name)
        entries[name] = element_from_json(obj[name], gens)
        gens = entries[name].gens
    return GL11Point(entries["a"], entries["beta"], entries["gamma"], entries["d"])


# --- coordinate rings -----------------------------------------------------


def c11x_ring() -> Tuple[GeneratorSet, GrassmannElement, GrassmannElement]:
    """The unconstrained invertible 1|1 coordinates (w, eta) together with
    their formal conjugates; star swaps each generator with its partner."""
    gens = GeneratorSet(["eta", "etabar"], pairing=[[0, 1]], even=["w", "wbar"])
    gens.install_star_images(
        [gens.odd_gen("etabar"), gens.odd_gen("eta")],
        [gens.even_gen("wbar"), gens.even_gen("w")],
    )
    return gens, gens.even_gen("w"), gens.odd_gen("eta")


def s11_chart_ring() -> Tuple[GeneratorSet, GrassmannElement, GrassmannElement]:
    """The reduced-circle chart: the fixed-point constraints are built into
    star, so star(w) = w^-1 and star(eta) = -i w^-2 eta identically."""
    gens = GeneratorSet(["eta"], even=["w"])
    w = gens.even_gen("w")
    eta = gens.odd_gen("eta")
    gens.install_star_images(
        [-I * gens.even_gen("w", -2) * eta],
        [gens.even_gen("w", -1)],
    )
    return gens, w, eta


def sl11_generic_ring() -> Tuple[GeneratorSet, GL11Point]:
    """A generic point with unit berezinian: d is eliminated through
    d = a - a^-1*beta*gamma, which makes Ber = 1 an identity."""
    gens = GeneratorSet(
        ["beta", "betabar", "gamma", "gammabar"],
        pairing=[[0, 1], [2, 3]],
        even=["a", "abar"],
    )
    gens.install_star_images(
        [gens.odd_gen(n) for n in ("betabar", "beta", "gammabar", "gamma")],
        [gens.even_gen("abar"), gens.even_gen("a")],
    )
    a = gens.even_gen("a")
    beta = gens.odd_gen("beta")
    gamma = gens.odd_gen("gamma")
    d = a - gens.even_gen("a", -1) * beta * gamma
    return gens, GL11Point(a, beta, gamma, d)


def _su11_star_sign(group: str) -> GaussianRational:
    if group == "su11":
        return -I
    if group == "su11_minus":
        return I
    raise ValueError("group must be su11 or su11_minus")


def su11_chart_ring(group: str = "su11", copies: int = 1,
                    ) -> Tuple[GeneratorSet, List[GL11Point]]:
    """Generic member points of the chosen unitary group.

    The conjugate of each even coordinate is eliminated through the defining
    constraint a*star(a)*(1 +- i*b*star(b)) = 1, so membership relations
    become identities of the ring.  ``copies`` independent points share one
    ring, which is what the closure checks need.
    """
    sign = _su11_star_sign(group)
    odd_names: List[str] = []
    pairing = []
    for k in range(copies):
        odd_names += ["b%d" % k, "b%dbar" % k]
        pairing.append([2 * k, 2 * k + 1])
    even_names = ["a%d" % k for k in range(copies)]
    gens = GeneratorSet(odd_names, pairing=pairing, even=even_names)

    even_images = []
    for k in range(copies):
        b = gens.odd_gen("b%d" % k)
        bbar = gens.odd_gen("b%dbar" % k)
        # star(a) = a^-1 (1 + sign * i^2 ... ) written directly:
        # plus group: a^-1 (1 - i b bbar); minus group: a^-1 (1 + i b bbar)
        even_images.append(gens.even_gen("a%d" % k, -1) * (gens.one() + sign * b * bbar))
    gens.install_star_images(
        [gens.odd_gen(odd_names[i ^ 1]) for i in range(2 * copies)],
        even_images,
    )

    points = []
    for k in range(copies):
        a = gens.even_gen("a%d" % k)
        b = gens.odd_gen("b%d" % k)
        points.append(_member_point(gens, group, a, b))
    return gens, points


def _member_point(gens: GeneratorSet, group: str, a: GrassmannElement,
                  b: GrassmannElement) -> GL11Point:
    """The member point of the chosen group with upper row (a, b)."""
    d = a.star().invert()
    if group == "su11":
        gamma = -I * b.star() * a * a
    else:
        gamma = I * b.star() * a * a
    return GL11Point(a, b, gamma, d)


# --- involutions ----------------------------------------------------------


def rho_s11(w: GrassmannElement, eta: GrassmannElement,
            ) -> Tuple[GrassmannElement, GrassmannElement]:
    """The defining real structure of the circle supergroup on (w, eta)
    coordinates: (w, eta) -> (star(w)^-1, i*star(w)^-2*star(eta))."""
    if w.parity() != "even":
        raise ValueError("w must be even")
    if not eta.is_zero() and eta.parity() != "odd":
        raise ValueError("eta must be odd")
    wbar_inv = w.star().invert()
    return wbar_inv, I * wbar_inv * wbar_inv * eta.star()


def sigma_su(p: GL11Point) -> GL11Point:
    """The defining real structure of the unitary group on 2x2 points."""
    abar_inv = p.a.star().invert()
    sq = abar_inv * abar_inv
    return GL11Point(
        p.d.star().invert(),
        -I * sq * p.gamma.star(),
        -I * sq * p.beta.star(),
        abar_inv,
    )


# --- membership -----------------------------------------------------------


def membership(p: GL11Point, group: str) -> Tuple[bool, str]:
    """Exact membership test with a diagnostic naming the first violated
    relation; the diagnostic is "member" on success."""
    if group == "sl11":
        if berezinian(p.matrix()) == p.a.gens.one():
            return True, "member"
        return False, "berezinian differs from 1"
    sign = _su11_star_sign(group)
    gens = p.a.gens
    expected_gamma = sign * p.beta.star() * p.a * p.a
    if p.gamma != expected_gamma:
        return False, (
            "lower-left entry is not %si*star(beta)*a^2"
            % ("-" if group == "su11" else "")
        )
    if p.d != p.a.star().invert():
        return False, "lower-right entry is not star(a)^-1"
    unit = p.a * p.a.star() * (gens.one() - sign * p.beta * p.beta.star())
    if unit != gens.one():
        return False, "defining constraint a*star(a)*(1 %s i*beta*star(beta)) != 1" % (
            "+" if group == "su11" else "-"
        )
    return True, "member"


# --- factorization --------------------------------------------------------


class FactorizationTriple:
    """The circle coordinate and the two odd coordinates of a unitary point."""

    __slots__ = ("t", "theta", "eta")

    def __init__(self, t: GrassmannElement, theta: GrassmannElement,
                 eta: GrassmannElement):
        if t.parity() != "even":
            raise ValueError("t must be even")
        for name, x in (("theta", theta), ("eta", eta)):
            if not x.is_zero() and x.parity() != "odd":
                raise ValueError("%s must be odd" % name)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "eta", eta)

    def __setattr__(self, name, value):
        raise AttributeError("FactorizationTriple is immutable")

    def __eq__(self, other):
        if not isinstance(other, FactorizationTriple):
            return NotImplemented
        return (
            self.t == other.t
            and self.theta == other.theta
            and self.eta == other.eta
        )

    __hash__ = None

    def __repr__(self):
        return "FactorizationTriple(%r, %r, %r)" % (self.t, self.theta, self.eta)

    def to_json(self) -> dict:
        return {
            "t": self.t.to_json(),
            "theta": self.theta.to_json(),
            "eta": self.eta.to_json(),
        }


def triple_from_json(obj: object, gens: Optional[GeneratorSet] = None,
                     ) -> FactorizationTriple:
    if not isinstance(obj, dict):
        raise ValueError("triple JSON must be an object")
    parts = {}
    for name in ("t", "theta", "eta"):
        if name not in obj:
            raise ValueError("triple JSON is missing entry %r" % name)
        parts[name] = element_from_json(obj[name], gens)
        gens = parts[name].gens
    return FactorizationTriple(parts["t"], parts["theta"], parts["eta"])


def factorize(p: GL11Point, group: str = "su11") -> FactorizationTriple:
    """Coordinates (t, theta, eta) with p = diag(t, star(t)^-1) *
    (1 + theta*U) * (1 + eta*S).

    Each unitary group gets its own derived formulas; in both cases theta
    and eta have a definite reality type (star-real for su11, star-imaginary
    for the isomer), which is recorded in the verify report rather than
    asserted here.
    """
    ok, diag = membership(p, group)
    if not ok:
        raise ValueError("not a member of %s: %s" % (group, diag))
    a, b = p.a, p.beta
    abar, bbar = a.star(), b.star()
    if group == "su11":
        t = a * (b.gens.one() + HALF * I * b * bbar)
        theta = HALF * (bbar * a + b * abar)
        eta = I * HALF * (bbar * a - b * abar)
    else:
        t = a * (b.gens.one() - HALF * I * b * bbar)
        theta = HALF * (b * abar - bbar * a)
        eta = -I * HALF * (bbar * a + b * abar)
    return FactorizationTriple(t, theta, eta)


def defactorize(t: GrassmannElement, theta: GrassmannElement,
                eta: GrassmannElement) -> GL11Point:
    """diag(t, star(t)^-1) * (1 + theta*U) * (1 + eta*S), expanded exactly.

    U and S are the defining odd matrices [[0,1],[-i,0]] and [[0,i],[-1,0]];
    the product of the two odd factors is
    [[1 - theta*eta, theta + i*eta], [-i*theta - eta, 1 + theta*eta]].
    """
    if t.parity() != "even":
        raise ValueError("t must be even")
    one = t.gens.one()
    tbar_inv = t.star().invert()
    te = theta * eta
    return GL11Point(
        t * (one - te),
        t * (theta + I * eta),
        tbar_inv * (-I * theta - eta),
        tbar_inv * (one + te),
    )


def factorization_triple_ring(group: str = "su11",
                              ) -> Tuple[GeneratorSet, FactorizationTriple]:
    """Generic (t, theta, eta) with the reality types the factorization
    produces: star(t) = t^-1 always; theta and eta are star-real for su11
    and star-imaginary for the isomer."""
    gens = GeneratorSet(["theta", "eta"], even=["t"])
    theta = gens.odd_gen("theta")
    eta = gens.odd_gen("eta")
    if group == "su11":
        odd_images = [theta, eta]
    elif group == "su11_minus":
        odd_images = [-theta, -eta]
    else:
        raise ValueError("group must be su11 or su11_minus")
    gens.install_star_images(odd_images, [gens.even_gen("t", -1)])
    return gens, FactorizationTriple(gens.even_gen("t"), theta, eta)
