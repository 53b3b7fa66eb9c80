"""Exact rank and triangularity checks."""

from fractions import Fraction
from random import Random

import pytest

from superlie import (
    Alphabet,
    Poly,
    enumerate_super_ls,
    expand,
    is_unitriangular,
    parse_poly,
    rank,
    scale,
    standard_bracket,
)
from conftest import random_poly

AB = Alphabet.from_names(["a", "b"])


def test_rank_of_nothing():
    assert rank([]) == (0, [])


def test_rank_collinear():
    p = parse_poly(AB, "ab - 2*b")
    r, certificate = rank([p, scale(2, p)])
    assert r == 1
    assert certificate == [0]


def test_rank_standard_bracket_expansions_length3():
    layer = [w for w in enumerate_super_ls(AB, 3) if len(w) == 3]
    vectors = [expand(standard_bracket(w)) for w in layer]
    r, _ = rank(vectors)
    assert r == 2 == len(layer)


def test_rank_ignores_zero_vectors():
    p = parse_poly(AB, "a + b")
    r, certificate = rank([Poly.zero(AB), p, p - p])
    assert (r, certificate) == (1, [1])


def test_rank_invariance_under_permutation_and_scaling():
    rng = Random(51)
    for _ in range(20):
        vectors = [random_poly(rng, AB, max_len=3) for _ in range(6)]
        r, _ = rank(vectors)
        shuffled = vectors[:]
        rng.shuffle(shuffled)
        scaled = [scale(Fraction(rng.randint(1, 7), rng.randint(1, 7)), v)
                  for v in shuffled]
        assert rank(scaled)[0] == r
        assert rank(list(reversed(vectors)))[0] == r


def test_certificate_subset_has_full_rank():
    rng = Random(53)
    for _ in range(20):
        vectors = [random_poly(rng, AB, max_len=3) for _ in range(7)]
        r, certificate = rank(vectors)
        assert len(certificate) == r
        assert rank([vectors[i] for i in certificate])[0] == r


def test_rank_rejects_mixed_alphabets():
    other = Alphabet.from_names(["a", "b", "c"])
    with pytest.raises(ValueError):
        rank([parse_poly(AB, "a"), parse_poly(other, "a")])


def test_unitriangular_standard_bracketings():
    odd_ab = Alphabet.from_names(["a", "b"], odd=["a"])
    pairs = [
        (w, expand(standard_bracket(w))) for w in enumerate_super_ls(odd_ab, 5)
    ]
    assert is_unitriangular(pairs)


def test_unitriangular_rejects_wrong_claims():
    w = AB.word("ba")
    vector = expand(standard_bracket(w))
    assert is_unitriangular([(w, vector)])
    assert not is_unitriangular([(AB.word("b"), vector)])  # wrong leading word
    assert not is_unitriangular([(w, scale(3, vector))])  # wrong coefficient
    assert not is_unitriangular([(w, Poly.zero(AB))])
    assert not is_unitriangular([(AB.word("ab"), parse_poly(AB, "ab"))])  # not LS


def test_unitriangular_odd_square_coefficient():
    a_odd = Alphabet.from_names(["a"], odd=["a"])
    w = a_odd.word("aa")
    assert is_unitriangular([(w, parse_poly(a_odd, "2*aa"))])
    assert not is_unitriangular([(w, parse_poly(a_odd, "aa"))])
