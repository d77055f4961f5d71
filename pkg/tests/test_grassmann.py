import random
from fractions import Fraction
from itertools import combinations

import pytest

from supercircle.grassmann import (
    EVEN,
    INHOMOGENEOUS,
    ODD,
    GeneratorSet,
    all_monomials,
    element_from_json,
    invert,
    multiply,
    parity,
    star,
)
from supercircle.scalars import FloatScalar, GaussianRational

GR = GaussianRational


@pytest.fixture
def paired():
    return GeneratorSet(["theta", "thetabar"], pairing=[[0, 1]])


@pytest.fixture
def four():
    return GeneratorSet(["a", "b", "c", "d"])


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet(["x", "x"])
    with pytest.raises(ValueError):
        GeneratorSet(["x", "y"], pairing=[[0, 2]])
    g = GeneratorSet(["x", "y", "z"], pairing=[[0, 1]])
    assert g.pairing == (1, 0, 2)


def test_basic_products(paired):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    assert th * tb == -(tb * th)
    assert (th * th).is_zero()
    x = paired.one() + th * tb
    y = paired.one() - th * tb
    assert x * y == paired.one()


def test_mismatched_generator_sets_error(paired, four):
    with pytest.raises(ValueError, match="mismatched"):
        multiply(paired.odd_gen("theta"), four.odd_gen("a"))


def test_supercommutativity_exhaustive_four_generators(four):
    monos = list(all_monomials(four))
    for x, y in combinations(monos, 2):
        px, py = parity(x), parity(y)
        sign = -1 if (px == ODD and py == ODD) else 1
        assert x * y == sign * (y * x)


def test_associativity_on_random_triples(four):
    rng = random.Random(3)

    def rand_elem():
        terms = {}
        for mask in rng.sample(range(16), 5):
            terms[((), mask)] = GR(rng.randint(-4, 4), rng.randint(-4, 4))
        return four.element(terms)

    for _ in range(60):
        x, y, z = rand_elem(), rand_elem(), rand_elem()
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_parity(paired, four):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    assert parity(th * tb) == EVEN
    assert parity(th) == ODD
    a, b, c = (four.odd_gen(n) for n in "abc")
    assert parity(a * b * c) == ODD
    assert parity(paired.one() + th) == INHOMOGENEOUS
    assert parity(paired.zero()) == EVEN


def test_star_basics(paired):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    assert star(th) == tb
    assert star(paired.one()) == paired.one()
    i = GR(0, 1)
    # star(i*theta*thetabar) = -i*thetabar*theta = i*theta*thetabar
    assert star(i * th * tb) == i * th * tb


def test_star_is_involutive_and_multiplicative(paired):
    rng = random.Random(5)
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    pool = [paired.one(), th, tb, th * tb]
    for _ in range(50):
        x = sum(
            (GR(rng.randint(-3, 3), rng.randint(-3, 3)) * p for p in pool),
            paired.zero(),
        )
        y = sum(
            (GR(rng.randint(-3, 3), rng.randint(-3, 3)) * p for p in pool),
            paired.zero(),
        )
        assert star(star(x)) == x
        assert star(x * y) == star(x) * star(y)


def test_star_requires_pairing(four):
    with pytest.raises(ValueError, match="no pairing"):
        star(four.odd_gen("a"))


def test_star_with_fixed_points():
    g = GeneratorSet(["xi", "theta", "thetabar"], pairing=[[1, 2]])
    xi = g.odd_gen("xi")
    assert star(xi) == xi
    assert star(GR(0, 1) * xi) == GR(0, -1) * xi


def test_invert_examples(paired):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    x = paired.one() + th * tb
    assert invert(x) == paired.one() - th * tb
    assert invert(paired.scalar(GR(2, 0))) == paired.scalar(GR(Fraction(1, 2), 0))
    y = paired.scalar(2) + th * tb
    yi = invert(y)
    assert yi == paired.scalar(GR(Fraction(1, 2), 0)) - GR(Fraction(1, 4), 0) * th * tb
    assert y * yi == paired.one()


def test_invert_errors(paired):
    th = paired.odd_gen("theta")
    with pytest.raises(ValueError, match="not invertible"):
        invert(th * paired.odd_gen("thetabar") * 0 + th * th)  # zero element
    with pytest.raises(ValueError, match="parity"):
        invert(th)
    with pytest.raises(ValueError, match="parity"):
        invert(paired.one() + th)
    with pytest.raises(ValueError, match="not invertible"):
        invert(th * paired.odd_gen("thetabar"))  # zero body


def test_invert_random_even_invertibles(four):
    rng = random.Random(17)
    even_masks = [m for m in range(16) if bin(m).count("1") % 2 == 0 and m != 0]
    for _ in range(500):
        terms = {((), 0): GR(rng.randint(1, 5), rng.randint(-5, 5))}
        for mask in rng.sample(even_masks, rng.randint(1, len(even_masks))):
            c = GR(rng.randint(-5, 5), rng.randint(-5, 5))
            if not c.is_zero():
                terms[((), mask)] = c
        x = four.element(terms)
        assert invert(x) * x == four.one()


def test_laurent_generators():
    g = GeneratorSet(["eta", "etabar"], even=["w"])
    w = g.even_gen("w")
    eta, etabar = g.odd_gen("eta"), g.odd_gen("etabar")
    assert w * g.even_gen("w", -1) == g.one()
    x = w * w * eta
    assert x * w == g.even_gen("w", 3) * eta
    y = w + w * eta * etabar  # w*(1 + eta*etabar) is a unit
    assert invert(y) * y == g.one()
    with pytest.raises(ValueError, match="not invertible"):
        invert(w + g.one())


def test_laurent_star_images():
    g = GeneratorSet(["eta"], even=["w"])
    w_inv = g.even_gen("w", -1)
    minus_i = GR(0, -1)
    g.install_star_images(
        odd_images=[minus_i * g.even_gen("w", -2) * g.odd_gen("eta")],
        even_images=[w_inv],
    )
    w = g.even_gen("w")
    eta = g.odd_gen("eta")
    assert star(w) == w_inv
    assert star(star(w)) == w
    assert star(star(eta)) == eta
    assert star(w * eta) == star(w) * star(eta)


def test_element_json_round_trip(paired):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    x = GR(Fraction(1, 2), 0) * th + GR(0, 1) * th * tb + paired.scalar(3)
    j = x.to_json()
    assert j["gens"] == ["theta", "thetabar"]
    assert j["pairing"] == [[0, 1]]
    monos = [t["mono"] for t in j["terms"]]
    assert monos == [[], [0], [0, 1]]
    y = element_from_json(j)
    assert y == x
    assert y.gens == paired


def test_element_json_rejects_malformed(paired):
    with pytest.raises(ValueError):
        element_from_json({"terms": []})
    with pytest.raises(ValueError):
        element_from_json(
            {"gens": ["theta"], "terms": [{"mono": [3], "coef": {"re": "1", "im": "0"}}]}
        )
    with pytest.raises(ValueError):
        element_from_json(
            {"gens": ["theta"], "terms": [{"mono": [0, 0], "coef": {"re": "1", "im": "0"}}]}
        )
    j = paired.odd_gen("theta").to_json()
    other = GeneratorSet(["x", "y"]).odd_gen("x").to_json()
    with pytest.raises(ValueError, match="disagree"):
        element_from_json(other, gens=paired)
    assert element_from_json(j, gens=paired) == paired.odd_gen("theta")


def test_float_coefficients(paired):
    th = paired.odd_gen("theta")
    x = FloatScalar(0.5, 0.0) * th + paired.scalar(FloatScalar(2.0, 0.0))
    y = x * x
    assert y.coefficient(((), 0)) == FloatScalar(4.0, 0.0)
    assert y.coefficient(((), 1)) == FloatScalar(2.0, 0.0)


def test_body_and_soul(paired):
    th = paired.odd_gen("theta")
    tb = paired.odd_gen("thetabar")
    x = paired.scalar(GR(2, 1)) + th * tb * 5
    assert x.body() == GR(2, 1)
    assert x.soul() == 5 * th * tb
    assert x.soul().body().is_zero()
