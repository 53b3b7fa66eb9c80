"""Shared helpers for the test suite."""

from fractions import Fraction
from random import Random

from superlie import Poly, Word


def random_word(rng: Random, alphabet, max_len=4, min_len=0) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(alphabet, tuple(rng.randrange(len(alphabet)) for _ in range(n)))


def random_poly(rng: Random, alphabet, max_terms=4, max_len=4) -> Poly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        terms.append((random_word(rng, alphabet, max_len), coeff))
    return Poly(alphabet, terms)


def random_homogeneous_poly(rng: Random, alphabet, parity, max_terms=3, max_len=4) -> Poly:
    """A nonzero polynomial all of whose words have the requested parity."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            for _ in range(200):
                w = random_word(rng, alphabet, max_len)
                if w.parity == parity:
                    break
            else:
                raise RuntimeError("alphabet cannot produce this parity")
            terms.append((w, Fraction(rng.randint(-4, 4), rng.randint(1, 4))))
        p = Poly(alphabet, terms)
        if not p.is_zero():
            return p
