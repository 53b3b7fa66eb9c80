"""Three desk-scale extension inputs used by the test suite and the docs.

EX1: even subalgebra {a} inside an abelian even 2-dimensional algebra,
     derivation a -> x, even stable letter.  Exercises the plain pair and
     stable-letter relations with no odd symbols at all.
EX2: even subalgebra {x} with an odd complement symbol a squaring to x,
     derivation x -> a, odd stable letter.  Exercises the odd-square rules
     on a complement symbol (composition families 3 and 4 shapes).
EX3: odd subalgebra {a} with [a, a] = 0, derivation a -> x, odd stable
     letter.  Exercises the odd-square rule inside the subalgebra (family 5)
     and the self-bracket [t, t] basis monomial.
"""

from __future__ import annotations

from .hnn import HnnPresentation, load_presentation

EX1 = {
    "generators": [
        {"name": "a", "parity": 0},
        {"name": "x", "parity": 0},
    ],
    "subalgebra_size": 1,
    "d_parity": 0,
    "brackets": [],
    "derivation": [
        {"arg": "a", "value": [{"basis": "x", "coeff": "1"}]},
    ],
}

EX2 = {
    "generators": [
        {"name": "x", "parity": 0},
        {"name": "a", "parity": 1},
    ],
    "subalgebra_size": 1,
    "d_parity": 1,
    "brackets": [
        {"left": "a", "right": "a", "value": [{"basis": "x", "coeff": "1"}]},
    ],
    "derivation": [
        {"arg": "x", "value": [{"basis": "a", "coeff": "1"}]},
    ],
}

EX3 = {
    "generators": [
        {"name": "a", "parity": 1},
        {"name": "x", "parity": 0},
    ],
    "subalgebra_size": 1,
    "d_parity": 1,
    "brackets": [],
    "derivation": [
        {"arg": "a", "value": [{"basis": "x", "coeff": "1"}]},
    ],
}

ALL = {"ex1": EX1, "ex2": EX2, "ex3": EX3}


def ex1() -> HnnPresentation:
    return load_presentation(EX1)


def ex2() -> HnnPresentation:
    return load_presentation(EX2)


def ex3() -> HnnPresentation:
    return load_presentation(EX3)
