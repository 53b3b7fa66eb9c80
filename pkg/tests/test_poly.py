"""Ring structure, grading, superbracket, leading data, text form."""

from fractions import Fraction
from random import Random

import pytest

from superlie import (
    EVEN,
    MIXED,
    ODD,
    Alphabet,
    Poly,
    parse_poly,
    poly_to_text,
    scale,
    superbracket,
)
from conftest import random_homogeneous_poly, random_poly

XY_ODD = Alphabet.from_names(["x", "y"], odd=["x", "y"])
AT = Alphabet.from_names(["a", "t"])
ABX = Alphabet.from_names(["a", "b", "x"])
MIXED_ALPHA = Alphabet.from_names(["a", "x", "t"], odd=["x"])


def gen(alphabet, name):
    return Poly.generator(alphabet, name)


def test_multiply_concatenates():
    x, y = gen(XY_ODD, "x"), gen(XY_ODD, "y")
    assert x * y == Poly.monomial(XY_ODD.word("xy"))


def test_additive_inverse():
    rng = Random(3)
    for _ in range(20):
        p = random_poly(rng, ABX)
        assert (p + scale(-1, p)).is_zero()


def test_distributivity_example():
    a = gen(ABX, "a")
    p = parse_poly(ABX, "ab + b")
    assert p * a == parse_poly(ABX, "aba + ba")


def test_ring_axioms_randomized():
    rng = Random(11)
    for _ in range(25):
        p, q, r = (random_poly(rng, ABX, max_len=3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p + q) * r == p * r + q * r


def test_alphabet_mismatch_rejected():
    with pytest.raises(ValueError):
        gen(ABX, "a") + gen(AT, "a")
    with pytest.raises(ValueError):
        gen(ABX, "a") * gen(AT, "a")


def test_parity_classification():
    xy = Poly.monomial(XY_ODD.word("xy"))
    assert xy.parity() == EVEN
    assert (gen(XY_ODD, "x") + xy).parity() == MIXED
    assert Poly.zero(XY_ODD).parity() == EVEN
    assert gen(XY_ODD, "x").parity() == ODD


def test_superbracket_odd_square():
    x = gen(XY_ODD, "x")
    assert superbracket(x, x) == Poly.monomial(XY_ODD.word("xx"), 2)


def test_superbracket_even_square():
    a = gen(AT, "a")
    assert superbracket(a, a).is_zero()


def test_superbracket_even_pair():
    t, a = gen(AT, "t"), gen(AT, "a")
    assert superbracket(t, a) == parse_poly(AT, "ta - at")


def test_super_anticommutativity_randomized():
    rng = Random(23)
    for _ in range(30):
        pp, pq = rng.randrange(2), rng.randrange(2)
        p = random_homogeneous_poly(rng, MIXED_ALPHA, pp)
        q = random_homogeneous_poly(rng, MIXED_ALPHA, pq)
        sign = -1 if (pp and pq) else 1
        assert superbracket(p, q) == scale(-sign, superbracket(q, p))


def test_super_jacobi_randomized():
    rng = Random(29)
    for _ in range(20):
        px, py, pz = (rng.randrange(2) for _ in range(3))
        x = random_homogeneous_poly(rng, MIXED_ALPHA, px, max_len=3)
        y = random_homogeneous_poly(rng, MIXED_ALPHA, py, max_len=3)
        z = random_homogeneous_poly(rng, MIXED_ALPHA, pz, max_len=3)
        s = lambda a, b: -1 if (a and b) else 1
        total = (
            scale(s(px, pz), superbracket(x, superbracket(y, z)))
            + scale(s(py, px), superbracket(y, superbracket(z, x)))
            + scale(s(pz, py), superbracket(z, superbracket(x, y)))
        )
        assert total.is_zero()


def test_odd_square_identity_randomized():
    # [x, [y, y]] = 2[[x, y], y] for odd y
    rng = Random(31)
    y = gen(MIXED_ALPHA, "x")  # the odd generator of this alphabet
    for _ in range(20):
        x = random_homogeneous_poly(rng, MIXED_ALPHA, rng.randrange(2), max_len=3)
        lhs = superbracket(x, superbracket(y, y))
        rhs = scale(2, superbracket(superbracket(x, y), y))
        assert lhs == rhs


def test_superbracket_is_bilinear_on_mixed_inputs():
    rng = Random(47)
    for _ in range(20):
        p = random_poly(rng, MIXED_ALPHA, max_len=3)
        q = random_poly(rng, MIXED_ALPHA, max_len=3)
        r = random_poly(rng, MIXED_ALPHA, max_len=3)
        assert superbracket(p, q) == superbracket(p.even_part(), q) + superbracket(
            p.odd_part(), q
        )
        assert superbracket(p + r, q) == superbracket(p, q) + superbracket(r, q)
        assert superbracket(q, p + r) == superbracket(q, p) + superbracket(q, r)


def test_leading_examples():
    x = gen(MIXED_ALPHA, "x")  # odd
    f_xx = superbracket(x, x)
    word, coeff = f_xx.leading()
    assert str(word) == "xx" and coeff == 2
    g = parse_poly(MIXED_ALPHA, "ta - x")
    word, coeff = g.leading()
    assert str(word) == "ta" and coeff == 1
    single = Poly.monomial(MIXED_ALPHA.word("ax"), Fraction(-7, 3))
    assert single.leading() == (MIXED_ALPHA.word("ax"), Fraction(-7, 3))


def test_leading_of_zero_rejected():
    with pytest.raises(ValueError):
        Poly.zero(ABX).leading()
    with pytest.raises(ValueError):
        Poly.zero(ABX).make_monic()


def test_make_monic():
    p = parse_poly(ABX, "2*xx - b")
    monic = p.make_monic()
    assert monic == parse_poly(ABX, "xx - 1/2*b")
    assert monic.make_monic() == monic
    rng = Random(37)
    for _ in range(20):
        q = random_poly(rng, ABX)
        if not q.is_zero():
            assert q.make_monic().leading()[1] == 1


def test_leading_is_multiplicative():
    rng = Random(41)
    for _ in range(30):
        p, q = random_poly(rng, ABX, max_len=3), random_poly(rng, ABX, max_len=3)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).leading()[0] == p.leading()[0] * q.leading()[0]


def test_terms_are_descending_deglex():
    p = parse_poly(ABX, "a + xx - 3*b + ab")
    words = [str(w) for w, _ in p.terms()]
    assert words == ["xx", "ab", "b", "a"]


def test_text_round_trip():
    rng = Random(43)
    for _ in range(40):
        p = random_poly(rng, ABX)
        assert parse_poly(ABX, poly_to_text(p)) == p
    for text in ("0", "1", "-1/2", "a - b", "-a + 2*xx - 1/3", "3/6*a"):
        p = parse_poly(ABX, text)
        assert parse_poly(ABX, poly_to_text(p)) == p
    assert parse_poly(ABX, "3/6*a") == parse_poly(ABX, "1/2*a")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly(ABX, "")
    with pytest.raises(ValueError):
        parse_poly(ABX, "a + q")


def test_floats_are_rejected():
    a = gen(ABX, "a")
    with pytest.raises(TypeError):
        scale(0.5, a)
    with pytest.raises(TypeError):
        Poly.monomial(ABX.word("a"), 1.25)


def test_text_round_trip_dotted_alphabet():
    dotted = Alphabet.from_names(["x1", "t"], odd=["x1"])
    p = parse_poly(dotted, "t.x1 - x1.t + 1/2")
    assert poly_to_text(p) == "t.x1 - x1.t + 1/2"
    assert parse_poly(dotted, poly_to_text(p)) == p
