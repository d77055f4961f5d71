import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercircle.scalars import (
    ExtendedScalar,
    ExtensionMismatchError,
    FloatScalar,
    GaussianRational,
    invert_extended,
    scalar_from_json,
    scalar_to_json,
    sqrt_neg_im,
)

GR = GaussianRational


def small_fractions():
    return st.fractions(min_value=-8, max_value=8, max_denominator=6)


def gaussians():
    return st.builds(GR, small_fractions(), small_fractions())


def test_lowest_terms_normalization():
    x = GR(Fraction(2, 4), Fraction(-6, 3))
    assert x.re == Fraction(1, 2)
    assert x.im == -2
    assert x.re.denominator > 0


def test_gaussian_basic_arithmetic():
    i = GR(0, 1)
    assert i * i == GR(-1, 0)
    assert (GR(1, 2) + GR(3, -1)) == GR(4, 1)
    assert GR(2, 3) - 2 == GR(0, 3)
    assert 1 - GR(0, 1) == GR(1, -1)
    assert GR(1, 1) * GR(1, -1) == GR(2, 0)
    assert -GR(1, -2) == GR(-1, 2)


def test_gaussian_division_and_inverse():
    x = GR(3, -4)
    assert x * x.inverse() == GR(1, 0)
    assert (GR(1, 0) / GR(0, 1)) == GR(0, -1)
    assert 6 / GR(2, 0) == GR(3, 0)
    with pytest.raises(ZeroDivisionError):
        GR(0, 0).inverse()


@settings(max_examples=200)
@given(gaussians(), gaussians(), gaussians())
def test_gaussian_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == GR(1, 0)


def test_sqrt_neg_im_exact_nondegenerate():
    s = sqrt_neg_im(3)
    assert isinstance(s, ExtendedScalar)
    assert s * s == GR(0, -3)
    t = sqrt_neg_im(-5)
    assert t * t == GR(0, 5)


def test_sqrt_neg_im_exact_degenerate_cases():
    # |m| = 2k^2 has the Gaussian-rational root k*(1 - i*sign(m)).
    for m, expected in [(2, GR(1, -1)), (-2, GR(1, 1)), (8, GR(2, -2)), (-8, GR(2, 2))]:
        r = sqrt_neg_im(m)
        assert isinstance(r, GaussianRational)
        assert r == expected
        assert r * r == GR(0, -m)


def test_sqrt_neg_im_float_principal_branch():
    s = sqrt_neg_im(2, mode="float")
    assert s == FloatScalar(1.0, -1.0)
    assert s * s == FloatScalar(0.0, -2.0)
    t = sqrt_neg_im(-2, mode="float")
    assert t == FloatScalar(1.0, 1.0)
    assert t * t == FloatScalar(0.0, 2.0)


def test_sqrt_neg_im_degenerate_weight():
    with pytest.raises(ValueError, match="degenerate weight"):
        sqrt_neg_im(0)
    with pytest.raises(ValueError, match="degenerate weight"):
        sqrt_neg_im(0, mode="float")


def test_extended_reduction_never_stores_s_squared():
    s = sqrt_neg_im(3)
    x = s * s * s
    # s^3 = -3i * s, still a degree-one expression in s
    assert isinstance(x, ExtendedScalar)
    assert x.c0 == GR(0, 0)
    assert x.c1 == GR(0, -3)


def test_extended_demotes_when_s_component_cancels():
    s = sqrt_neg_im(3)
    x = (s + 1) * (1 - s)  # 1 - s^2 = 1 + 3i
    assert isinstance(x, GaussianRational)
    assert x == GR(1, 3)


def test_invert_extended_examples():
    s3 = sqrt_neg_im(3)
    inv = invert_extended(s3)
    assert inv == ExtendedScalar(0, Fraction(1, 3), 3) * GR(0, 1)
    assert s3 * inv == GR(1, 0)
    assert invert_extended(GR(1, 0)) == GR(1, 0)
    # m = 2: the generator can be built by hand, and its rationalization
    # denominator 2i is nonzero, so inversion stays formal.
    s2 = ExtendedScalar(0, 1, 2)
    inv2 = s2.inverse()
    assert s2 * inv2 == GR(1, 0)
    # Substituting the explicit root 1 - i turns inv2 into (1+i)/2.
    root = GR(1, -1)
    value = inv2.c0 + inv2.c1 * root
    assert value == GR(Fraction(1, 2), Fraction(1, 2))


def test_invert_extended_zero_denominator_fallback():
    # (1 - i) + s at m = 2 annihilates the rationalization denominator; the
    # fallback substitutes s -> 1 - i and inverts 2*(1 - i) inside Q(i).
    x = ExtendedScalar(GR(1, -1), 1, 2)
    inv = invert_extended(x)
    assert isinstance(inv, GaussianRational)
    assert inv == GR(Fraction(1, 4), Fraction(1, 4))
    # (1 - i) - s is a zero divisor whose substituted value vanishes.
    with pytest.raises(ZeroDivisionError):
        invert_extended(ExtendedScalar(GR(1, -1), -1, 2))
    with pytest.raises(ZeroDivisionError):
        invert_extended(GR(0, 0))


@settings(max_examples=150)
@given(gaussians(), gaussians(), gaussians(), gaussians())
def test_extended_commutative_and_associative(a0, a1, b0, b1):
    x = ExtendedScalar.make(a0, a1, 7)
    y = ExtendedScalar.make(b0, b1, 7)
    assert x * y == y * x
    assert x + y == y + x
    z = ExtendedScalar(1, 2, 7)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_extended_inverse_round_trip_random():
    rng = random.Random(11)
    for _ in range(300):
        m = rng.choice([1, 3, -3, 5, 7, -7, 9, 10, -10])
        x = ExtendedScalar.make(
            GR(rng.randint(-6, 6), rng.randint(-6, 6)),
            GR(rng.randint(-6, 6), rng.randint(-6, 6)),
            m,
        )
        if isinstance(x, GaussianRational):
            if x.is_zero():
                continue
            assert x * x.inverse() == GR(1, 0)
            continue
        assert x * invert_extended(x) == GR(1, 0)


def test_extension_mixing_is_an_error():
    x = sqrt_neg_im(3)
    y = sqrt_neg_im(5)
    with pytest.raises(ExtensionMismatchError):
        x + y
    with pytest.raises(ExtensionMismatchError):
        x * y
    # Gaussian rationals lift into any extension.
    assert (x + GR(1, 0)) - x == GR(1, 0)


def test_extended_conjugate_lands_in_opposite_extension():
    s3 = sqrt_neg_im(3)
    c = s3.conjugate()
    assert isinstance(c, ExtendedScalar)
    assert c.m == -3
    assert c * c == GR(0, 3)
    # Agreement with the float principal branch.
    z = s3.to_complex().conjugate()
    w = c.to_complex()
    assert math.isclose(z.real, w.real) and math.isclose(z.imag, w.imag)


def test_float_scalar_tolerance_equality():
    a = FloatScalar(1.0, 0.0, tol=1e-6)
    assert a == FloatScalar(1.0 + 5e-7, -5e-7, tol=1e-6)
    assert a != FloatScalar(1.0 + 5e-3, 0.0, tol=1e-6)
    assert FloatScalar(1e-12, -1e-12).is_zero()
    assert a * a.inverse() == FloatScalar(1.0, 0.0)


def test_float_mixes_with_exact():
    s = sqrt_neg_im(2)  # 1 - i exactly
    f = FloatScalar(1.0, -1.0)
    assert f == s
    assert f + GR(1, 1) == FloatScalar(2.0, 0.0)


def test_exact_float_agreement_on_random_inputs():
    rng = random.Random(7)
    tol = 1e-9
    checked = 0
    for _ in range(1000):
        a = GR(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
               Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        b = GR(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
               Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        fa, fb = a.to_float(tol), b.to_float(tol)
        assert fa + fb == (a + b).to_float(tol)
        assert fa * fb == (a * b).to_float(tol)
        if not b.is_zero():
            assert fa / fb == (a / b).to_float(tol)
        checked += 1
    assert checked == 1000


def test_scalar_json_round_trip():
    x = GR(Fraction(3, 4), Fraction(-2, 7))
    j = scalar_to_json(x)
    assert j == {"re": "3/4", "im": "-2/7"}
    assert scalar_from_json(j) == x

    s = ExtendedScalar(GR(1, 0), GR(0, Fraction(1, 2)), -4)
    j = scalar_to_json(s)
    assert j["m"] == -4
    assert scalar_from_json(j) == s

    f = FloatScalar(0.5, -1.25)
    j = scalar_to_json(f)
    assert j == {"re": 0.5, "im": -1.25}
    assert scalar_from_json(j) == f


def test_scalar_json_rejects_malformed():
    with pytest.raises(ValueError):
        scalar_from_json({"re": "1/2"})
    with pytest.raises(ValueError):
        scalar_from_json({"c0": {"re": "1", "im": "0"}, "c1": {"re": "1", "im": "0"}, "m": "three"})
    with pytest.raises(ValueError):
        scalar_from_json([1, 2])


def test_extended_scalar_rejects_zero_parameter():
    with pytest.raises(ValueError):
        ExtendedScalar(1, 1, 0)
