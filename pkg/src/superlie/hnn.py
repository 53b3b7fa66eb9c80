"""Adjoining a stable letter to a finite-dimensional Lie superalgebra.

The input is a structure-constant table: an ordered homogeneous basis whose
first ``subalgebra_size`` symbols span a subalgebra, bracket coefficients,
and a derivation table on the subalgebra of parity ``d_parity``.  Appending
a maximal stable letter ``t`` of that parity and imposing

    [t, a] = d(a)        for a in the subalgebra basis

presents the extension.  This module builds the corresponding rewrite
relations, checks their closure under composition (associatively, and again
through the five length-3 superbracket composition shapes the relations
admit), enumerates the bases of the extension and of its enveloping algebra,
produces the free generating set of the complement, and verifies the direct
sum decomposition degree by degree.

Two documented reading decisions:

* The stable-letter relations are indexed by the subalgebra *basis*; a
  bracket of ``t`` with an arbitrary subalgebra element then reduces by
  linearity, so nothing is lost.
* The odd-square rules cover only odd basis symbols of the original algebra,
  never ``t`` itself.  Consequently ``tt`` stays a reduced word when ``t``
  is odd, and ``[t, t]`` is a basis monomial of the extension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Mapping, Sequence, Union

from .bracketing import (
    NcMonomial,
    expand,
    is_admissible,
    right_normed_bracket,
    standard_bracket,
)
from .linalg import rank
from .poly import Poly, superbracket
from .rewrite import (
    RewriteSystem,
    GsbReport,
    enumerate_reduced_super_ls,
    is_gsb,
    is_reduced_word,
    lie_composition_len2,
    reduce,
)
from .words import Alphabet, Symbol, Word, deglex_key, is_super_ls, lex_cmp

Scalar = Union[int, Fraction]
CoeffMap = Mapping[int, Scalar]


def _clean_coeffs(coeffs: CoeffMap) -> dict[int, Fraction]:
    out = {}
    for v, c in dict(coeffs).items():
        if isinstance(c, float):
            raise TypeError("floating point coefficients are not allowed")
        c = Fraction(c)
        if c:
            out[v] = c
    return out


class StructureConstants:
    """Bracket and derivation tables over an ordered homogeneous basis.

    ``brackets`` maps ordered rank pairs (x, y) to {v: coefficient of v in
    [x, y]}; a missing pair is zero, and a missing mirror is derived through
    super anti-commutativity.  ``derivation`` maps subalgebra ranks to the
    coefficients of their image.  Construction is structural only: semantic
    coherence (Jacobi, derivation law, closure, parities) is the job of
    :func:`validate`, so corrupt tables can be represented and reported on.
    """

    __slots__ = ("alphabet", "subalgebra_size", "d_parity", "alpha", "beta")

    def __init__(
        self,
        alphabet: Alphabet,
        subalgebra_size: int,
        d_parity: int,
        brackets: Mapping[tuple[int, int], CoeffMap] = (),
        derivation: Mapping[int, CoeffMap] = (),
    ):
        size = len(alphabet)
        if not 0 <= subalgebra_size <= size:
            raise ValueError(f"subalgebra_size {subalgebra_size} out of range")
        if d_parity not in (0, 1):
            raise ValueError(f"d_parity must be 0 or 1, got {d_parity!r}")
        alpha: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (x, y), coeffs in dict(brackets).items():
            self._check_rank(x, size)
            self._check_rank(y, size)
            cleaned = _clean_coeffs(coeffs)
            for v in cleaned:
                self._check_rank(v, size)
            alpha[(x, y)] = cleaned
        beta: dict[int, dict[int, Fraction]] = {}
        for a, coeffs in dict(derivation).items():
            if not 0 <= a < subalgebra_size:
                raise ValueError(
                    f"derivation argument rank {a} is not a subalgebra symbol"
                )
            cleaned = _clean_coeffs(coeffs)
            for v in cleaned:
                self._check_rank(v, size)
            beta[a] = cleaned
        self.alphabet = alphabet
        self.subalgebra_size = subalgebra_size
        self.d_parity = d_parity
        self.alpha = alpha
        self.beta = beta

    @staticmethod
    def _check_rank(r: int, size: int) -> None:
        if not 0 <= r < size:
            raise ValueError(f"rank {r} out of range for a basis of size {size}")

    def parity(self, rank: int) -> int:
        return self.alphabet.symbols[rank].parity

    def name(self, rank: int) -> str:
        return self.alphabet.symbols[rank].name

    def subalgebra_ranks(self) -> range:
        return range(self.subalgebra_size)

    def complement_ranks(self) -> range:
        return range(self.subalgebra_size, len(self.alphabet))

    def bracket_coeffs(self, x: int, y: int) -> dict[int, Fraction]:
        """Coefficients of [x, y], deriving the missing mirror by sign."""
        stored = self.alpha.get((x, y))
        if stored is not None:
            return stored
        mirror = self.alpha.get((y, x))
        if mirror is None:
            return {}
        # [x,y] = -(-1)^{|x||y|}[y,x]
        factor = 1 if (self.parity(x) and self.parity(y)) else -1
        return {v: factor * c for v, c in mirror.items()}

    def derivation_coeffs(self, a: int) -> dict[int, Fraction]:
        return self.beta.get(a, {})


@dataclass(frozen=True)
class Violation:
    """One failed identity, located by the symbols involved."""

    check: str
    indices: tuple[str, ...]
    detail: str

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "indices": list(self.indices),
            "detail": self.detail,
        }


class ValidationReport:
    """Every identity violated by a structure-constant table."""

    __slots__ = ("violations",)

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }

    def __str__(self) -> str:
        if self.passed:
            return "structure constants: PASS"
        lines = [f"structure constants: FAIL ({len(self.violations)} violations)"]
        for v in self.violations:
            lines.append(f"  {v.check}({', '.join(v.indices)}): {v.detail}")
        return "\n".join(lines)


def _ad_ad_coeff(sc: StructureConstants, x: int, y: int, z: int, u: int) -> Fraction:
    """Coefficient of u in [x, [y, z]] through the tables."""
    total = Fraction(0)
    for v, c in sc.bracket_coeffs(y, z).items():
        total += c * sc.bracket_coeffs(x, v).get(u, Fraction(0))
    return total


def _sign(p: int, q: int) -> int:
    return -1 if (p and q) else 1


def validate(sc: StructureConstants) -> ValidationReport:
    """Check every identity the tables must satisfy; report, never raise.

    Covered: anti-commutativity of the stored table (including vanishing
    even diagonals), the super Jacobi identity on all ordered basis triples,
    the two odd-square consequences of Jacobi, the odd-square consequence of
    the derivation law, the derivation law itself on all subalgebra pairs,
    closure of the subalgebra under the bracket, and parity coherence of all
    stored coefficients.
    """
    violations: list[Violation] = []
    size = len(sc.alphabet)
    k = sc.subalgebra_size
    names = [s.name for s in sc.alphabet.symbols]
    parities = [s.parity for s in sc.alphabet.symbols]

    # anti-commutativity of explicitly stored mirror pairs, even diagonals zero
    for x in range(size):
        for y in range(x, size):
            if x == y:
                stored = sc.alpha.get((x, x))
                if stored and parities[x] == 0:
                    violations.append(
                        Violation(
                            "anticommutativity",
                            (names[x], names[x]),
                            "an even symbol must bracket to zero with itself",
                        )
                    )
                continue
            one, two = sc.alpha.get((x, y)), sc.alpha.get((y, x))
            if one is None or two is None:
                continue
            factor = 1 if (parities[x] and parities[y]) else -1
            vs = set(one) | set(two)
            for v in sorted(vs):
                lhs = two.get(v, Fraction(0))
                rhs = factor * one.get(v, Fraction(0))
                if lhs != rhs:
                    violations.append(
                        Violation(
                            "anticommutativity",
                            (names[y], names[x], names[v]),
                            f"stored {lhs}, anti-commutativity requires {rhs}",
                        )
                    )

    # super Jacobi on all ordered triples
    for x, y, z in product(range(size), repeat=3):
        for u in range(size):
            residual = (
                _sign(parities[x], parities[z]) * _ad_ad_coeff(sc, x, y, z, u)
                + _sign(parities[y], parities[x]) * _ad_ad_coeff(sc, y, z, x, u)
                + _sign(parities[z], parities[y]) * _ad_ad_coeff(sc, z, x, y, u)
            )
            if residual:
                violations.append(
                    Violation(
                        "jacobi",
                        (names[x], names[y], names[z], names[u]),
                        f"residual {residual}",
                    )
                )

    # odd squares against Jacobi: [x,[y,y]] = 2[[x,y],y] for odd y
    for y in range(size):
        if not parities[y]:
            continue
        for x in range(size):
            for u in range(size):
                lhs = Fraction(0)
                for v, c in sc.bracket_coeffs(y, y).items():
                    lhs += c * sc.bracket_coeffs(x, v).get(u, Fraction(0))
                rhs = Fraction(0)
                for v, c in sc.bracket_coeffs(x, y).items():
                    rhs += c * sc.bracket_coeffs(v, y).get(u, Fraction(0))
                if lhs != 2 * rhs:
                    violations.append(
                        Violation(
                            "odd-square-right",
                            (names[x], names[y], names[u]),
                            f"{lhs} != 2*({rhs})",
                        )
                    )

    # mirrored version: [[x,x],y] = 2[x,[x,y]] for odd x
    for x in range(size):
        if not parities[x]:
            continue
        for y in range(size):
            for u in range(size):
                lhs = Fraction(0)
                for v, c in sc.bracket_coeffs(x, x).items():
                    lhs += c * sc.bracket_coeffs(v, y).get(u, Fraction(0))
                rhs = Fraction(0)
                for v, c in sc.bracket_coeffs(x, y).items():
                    rhs += c * sc.bracket_coeffs(x, v).get(u, Fraction(0))
                if lhs != 2 * rhs:
                    violations.append(
                        Violation(
                            "odd-square-left",
                            (names[x], names[y], names[u]),
                            f"{lhs} != 2*({rhs})",
                        )
                    )

    # derivation of an odd square: d([a,a]) = 2[d(a), a] for odd a in the subalgebra
    for a in range(k):
        if not parities[a]:
            continue
        for u in range(size):
            lhs = Fraction(0)
            for v, c in sc.bracket_coeffs(a, a).items():
                if v < k:
                    lhs += c * sc.derivation_coeffs(v).get(u, Fraction(0))
            rhs = Fraction(0)
            for v, c in sc.derivation_coeffs(a).items():
                rhs += c * sc.bracket_coeffs(v, a).get(u, Fraction(0))
            if lhs != 2 * rhs:
                violations.append(
                    Violation(
                        "derivation-odd-square",
                        (names[a], names[u]),
                        f"{lhs} != 2*({rhs})",
                    )
                )

    # derivation law on all subalgebra pairs
    for a in range(k):
        for b in range(k):
            for u in range(size):
                lhs = Fraction(0)
                for v, c in sc.bracket_coeffs(a, b).items():
                    if v < k:
                        lhs += c * sc.derivation_coeffs(v).get(u, Fraction(0))
                rhs = Fraction(0)
                for v, c in sc.derivation_coeffs(a).items():
                    rhs += c * sc.bracket_coeffs(v, b).get(u, Fraction(0))
                for v, c in sc.derivation_coeffs(b).items():
                    rhs += _sign(sc.d_parity, parities[a]) * c * sc.bracket_coeffs(
                        a, v
                    ).get(u, Fraction(0))
                if lhs != rhs:
                    violations.append(
                        Violation(
                            "derivation-law",
                            (names[a], names[b], names[u]),
                            f"{lhs} != {rhs}",
                        )
                    )

    # subalgebra closure
    for a in range(k):
        for b in range(a, k):
            for v, c in sc.bracket_coeffs(a, b).items():
                if c and v >= k:
                    violations.append(
                        Violation(
                            "subalgebra-closure",
                            (names[a], names[b], names[v]),
                            f"coefficient {c} lands outside the subalgebra",
                        )
                    )

    # parity coherence of stored tables
    for (x, y), coeffs in sorted(sc.alpha.items()):
        want = (parities[x] + parities[y]) % 2
        for v, c in sorted(coeffs.items()):
            if c and parities[v] != want:
                violations.append(
                    Violation(
                        "parity",
                        (names[x], names[y], names[v]),
                        f"bracket of parities {parities[x]},{parities[y]} cannot "
                        f"hit a parity-{parities[v]} symbol",
                    )
                )
    for a, coeffs in sorted(sc.beta.items()):
        want = (parities[a] + sc.d_parity) % 2
        for v, c in sorted(coeffs.items()):
            if c and parities[v] != want:
                violations.append(
                    Violation(
                        "parity",
                        (names[a], names[v]),
                        f"derivation of parity {sc.d_parity} cannot map a "
                        f"parity-{parities[a]} symbol to a parity-{parities[v]} one",
                    )
                )

    return ValidationReport(violations)


class HnnPresentation:
    """A validated-shape extension input: tables plus the appended stable letter.

    The stable letter is strictly greater than every basis symbol and has the
    parity of the derivation.  At least one complement symbol is required;
    extending by a derivation of the whole algebra is rejected because the
    result degenerates to a (semi)direct product.
    """

    __slots__ = ("constants", "alphabet", "t_rank")

    def __init__(self, constants: StructureConstants, t_name: str = "t"):
        if constants.subalgebra_size >= len(constants.alphabet):
            raise ValueError(
                "the subalgebra must be proper: at least one complement symbol"
            )
        if constants.alphabet.has_name(t_name):
            raise ValueError(
                f"stable letter name {t_name!r} collides with a generator"
            )
        symbols = constants.alphabet.symbols + (
            Symbol(len(constants.alphabet), t_name, constants.d_parity),
        )
        self.constants = constants
        self.alphabet = Alphabet(symbols)
        self.t_rank = len(symbols) - 1

    @property
    def t_symbol(self) -> Symbol:
        return self.alphabet.symbols[self.t_rank]

    def basis_ranks(self) -> range:
        """Ranks of the original algebra's basis inside the extended alphabet."""
        return range(len(self.constants.alphabet))

    def subalgebra_ranks(self) -> range:
        return self.constants.subalgebra_ranks()

    def complement_ranks(self) -> range:
        return self.constants.complement_ranks()

    def __repr__(self) -> str:
        return (
            f"HnnPresentation({self.alphabet!r}, "
            f"subalgebra_size={self.constants.subalgebra_size})"
        )


def _letter(pres: HnnPresentation, rank: int) -> Poly:
    return Poly.monomial(Word(pres.alphabet, (rank,)))


def _tail_poly(pres: HnnPresentation, coeffs: Mapping[int, Fraction]) -> Poly:
    return Poly(
        pres.alphabet,
        [(Word(pres.alphabet, (v,)), c) for v, c in sorted(coeffs.items())],
    )


def build_relations(pres: HnnPresentation) -> RewriteSystem:
    """The defining relations as a rewrite system with leading words
    {xy : x > y} + {xx : x odd} + {t a : a in the subalgebra basis}.

    Pair relations [x, y] - sum of bracket coefficients for x > y, odd-square
    relations [x, x] - ... (stored monic, i.e. halved), and stable-letter
    relations [t, a] - derivation image.  Raises when validation fails.
    """
    report = validate(pres.constants)
    if not report.passed:
        raise ValueError(f"structure constants fail validation\n{report}")
    sc = pres.constants
    size = len(sc.alphabet)
    polys: list[Poly] = []
    for x in range(size):
        for y in range(x):
            polys.append(
                superbracket(_letter(pres, x), _letter(pres, y))
                - _tail_poly(pres, sc.bracket_coeffs(x, y))
            )
    for x in range(size):
        if sc.parity(x) == 1:
            polys.append(
                superbracket(_letter(pres, x), _letter(pres, x))
                - _tail_poly(pres, sc.bracket_coeffs(x, x))
            )
    for a in sc.subalgebra_ranks():
        polys.append(
            superbracket(_letter(pres, pres.t_rank), _letter(pres, a))
            - _tail_poly(pres, sc.derivation_coeffs(a))
        )
    polys.sort(key=lambda p: deglex_key(p.leading()[0]))
    return RewriteSystem.from_polys(pres.alphabet, polys)


@dataclass(frozen=True)
class LieCompositionCheck:
    """One length-3 superbracket composition, identified by its shape family."""

    family: int
    description: str
    word: Word
    normal_form: Poly
    passed: bool

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "description": self.description,
            "word": str(self.word),
            "normal_form": str(self.normal_form),
            "passed": self.passed,
        }


class HnnGsbReport:
    """Associative closure report plus the superbracket composition families."""

    __slots__ = ("associative", "lie_checks", "passed")

    def __init__(self, associative: GsbReport, lie_checks: Sequence[LieCompositionCheck]):
        self.associative = associative
        self.lie_checks = tuple(lie_checks)
        self.passed = associative.passed and all(c.passed for c in self.lie_checks)

    def families_exercised(self) -> tuple[int, ...]:
        return tuple(sorted({c.family for c in self.lie_checks}))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "associative": self.associative.to_dict(),
            "lie_compositions": [c.to_dict() for c in self.lie_checks],
        }

    def __str__(self) -> str:
        lines = [str(self.associative)]
        lines.append(
            f"superbracket compositions: "
            f"{'PASS' if all(c.passed for c in self.lie_checks) else 'FAIL'} "
            f"({len(self.lie_checks)} checked, families {list(self.families_exercised())})"
        )
        for c in self.lie_checks:
            status = "ok" if c.passed else f"NONZERO: {c.normal_form}"
            lines.append(f"  family {c.family} at {str(c.word)!r}: {status}")
        return "\n".join(lines)


def verify_hnn_gsb(pres: HnnPresentation) -> HnnGsbReport:
    """Closure of the defining relations, checked twice over.

    First associatively (every overlap and inclusion composition reduces to
    zero), then independently through the five superbracket composition
    shapes the relation set admits:

      1. pair against pair,          x > y > z:            word xyz
      2. stable letter against pair, a > b in the subalgebra: word t a b
      3. pair against odd square,    x > y, y odd:         word x y y
      4. odd square against pair,    x odd, x > y:         word x x y
      5. stable letter against odd square, a odd subalgebra: word t a a
    """
    system = build_relations(pres)
    associative = is_gsb(system)
    sc = pres.constants
    size = len(sc.alphabet)
    t = pres.t_rank
    checks: list[LieCompositionCheck] = []

    def lead(*ranks: int):
        return system.rule_with_leading(Word(pres.alphabet, ranks))

    def check(family: int, description: str, p, q, ranks: tuple[int, ...]) -> None:
        word = Word(pres.alphabet, ranks)
        composition = lie_composition_len2(p, q, word)
        normal_form, _ = reduce(composition, system)
        checks.append(
            LieCompositionCheck(
                family, description, word, normal_form, normal_form.is_zero()
            )
        )

    for x in range(size):
        for y in range(x):
            for z in range(y):
                check(1, "pair/pair", lead(x, y), lead(y, z), (x, y, z))
    for a in sc.subalgebra_ranks():
        for b in range(a):
            check(2, "stable/pair", lead(t, a), lead(a, b), (t, a, b))
    for x in range(size):
        for y in range(x):
            if sc.parity(y):
                check(3, "pair/odd-square", lead(x, y), lead(y, y), (x, y, y))
    for x in range(size):
        if sc.parity(x):
            for y in range(x):
                check(4, "odd-square/pair", lead(x, x), lead(x, y), (x, x, y))
    for a in sc.subalgebra_ranks():
        if sc.parity(a):
            check(5, "stable/odd-square", lead(t, a), lead(a, a), (t, a, a))

    checks.sort(key=lambda c: (c.family, deglex_key(c.word)))
    return HnnGsbReport(associative, checks)


# -- basis enumeration ----------------------------------------------------------


def _increasing_blocks(
    pres: HnnPresentation, ranks: Sequence[int], length: int
) -> list[tuple[int, ...]]:
    """Weakly increasing tuples over ``ranks`` with odd symbols used at most once."""
    parities = [s.parity for s in pres.alphabet.symbols]
    out = []
    for tup in combinations_with_replacement(ranks, length):
        if any(
            parities[a] and a == b for a, b in zip(tup, tup[1:])
        ):  # repeats are adjacent in a sorted tuple
            continue
        out.append(tup)
    return out


def _is_increasing_block(pres: HnnPresentation, ranks: Sequence[int]) -> bool:
    parities = [s.parity for s in pres.alphabet.symbols]
    return all(a <= b for a, b in zip(ranks, ranks[1:])) and not any(
        parities[a] and a == b for a, b in zip(ranks, ranks[1:])
    )


@dataclass(frozen=True)
class PbwPattern:
    """Exponent-block shape of an enveloping-algebra basis word.

    ``head`` is a weakly increasing run over the whole basis with odd symbols
    at most once; each middle entry is a stable-letter power (>= 1) followed
    by a non-empty weakly increasing complement block; ``tail_power`` is the
    trailing stable-letter power.  Every basis word has exactly one such
    shape, and every shape assembles to a basis word.
    """

    head: tuple[int, ...]
    middle: tuple[tuple[int, tuple[int, ...]], ...]
    tail_power: int

    def __len__(self) -> int:
        return (
            len(self.head)
            + sum(power + len(block) for power, block in self.middle)
            + self.tail_power
        )

    def word(self, pres: HnnPresentation) -> Word:
        t = pres.t_rank
        letters = list(self.head)
        for power, block in self.middle:
            letters.extend((t,) * power)
            letters.extend(block)
        letters.extend((t,) * self.tail_power)
        return Word(pres.alphabet, letters)

    @staticmethod
    def of(pres: HnnPresentation, w: Word) -> "PbwPattern | None":
        """Classify a word, or return None when it does not fit the shape."""
        t = pres.t_rank
        complement = set(pres.complement_ranks())
        letters = w.letters
        i = 0
        while i < len(letters) and letters[i] != t:
            i += 1
        head = letters[:i]
        if not _is_increasing_block(pres, head):
            return None
        middle: list[tuple[int, tuple[int, ...]]] = []
        tail_power = 0
        while i < len(letters):
            power = 0
            while i < len(letters) and letters[i] == t:
                power += 1
                i += 1
            j = i
            while j < len(letters) and letters[j] != t:
                j += 1
            block = letters[i:j]
            i = j
            if not block:
                tail_power = power
                break
            if not all(r in complement for r in block):
                return None
            if not _is_increasing_block(pres, block):
                return None
            middle.append((power, block))
        return PbwPattern(head, tuple(middle), tail_power)


def _middle_shapes(
    pres: HnnPresentation, remaining: int
) -> list[tuple[tuple[tuple[int, tuple[int, ...]], ...], int]]:
    """All (middle, tail_power) block shapes of total length ``remaining``."""
    if remaining == 0:
        return [((), 0)]
    out: list[tuple[tuple[tuple[int, tuple[int, ...]], ...], int]] = [((), remaining)]
    complement = list(pres.complement_ranks())
    for power in range(1, remaining):
        for block_len in range(1, remaining - power + 1):
            for block in _increasing_blocks(pres, complement, block_len):
                for rest_middle, rest_tail in _middle_shapes(
                    pres, remaining - power - block_len
                ):
                    out.append((((power, block),) + rest_middle, rest_tail))
    return out


def enumerate_pbw_patterns(pres: HnnPresentation, n: int) -> list[PbwPattern]:
    """All block shapes of exact total length ``n``."""
    out = []
    basis = list(pres.basis_ranks())
    for head_len in range(n + 1):
        for head in _increasing_blocks(pres, basis, head_len):
            for middle, tail_power in _middle_shapes(pres, n - head_len):
                out.append(PbwPattern(head, middle, tail_power))
    return out


def enumerate_uh_basis(pres: HnnPresentation, max_len: int) -> list[Word]:
    """Basis words of the enveloping algebra up to ``max_len``, in deglex order.

    Generated by assembling block shapes, then cross-checked against the
    words avoiding every relation leading word: membership in the block
    pattern and being a reduced word must agree exactly.  A mismatch would
    mean an internal inconsistency and raises.
    """
    system = build_relations(pres)
    pattern: list[Word] = []
    for n in range(max_len + 1):
        pattern.extend(p.word(pres) for p in enumerate_pbw_patterns(pres, n))
    pattern_set = set(pattern)
    size = len(pres.alphabet)
    for n in range(max_len + 1):
        for ranks in product(range(size), repeat=n):
            w = Word(pres.alphabet, ranks)
            reduced = is_reduced_word(w, system)
            if reduced != (w in pattern_set) or reduced != (
                PbwPattern.of(pres, w) is not None
            ):
                raise RuntimeError(
                    "pattern enumeration disagrees with the reduced-word scan; "
                    "this indicates a bug, not bad input"
                )
    pattern.sort(key=deglex_key)
    return pattern


# -- the free complement ---------------------------------------------------------


def free_generators_W(pres: HnnPresentation, max_len: int) -> list[NcMonomial]:
    """Left-combed generators [..[[t, x1], x2].., xs] of the free complement.

    One for every weakly increasing tuple over the complement with odd
    symbols at most once, of total length <= max_len, in deglex order of the
    underlying word.
    """
    out = []
    complement = list(pres.complement_ranks())
    for tail_len in range(max_len):
        for xs in _increasing_blocks(pres, complement, tail_len):
            out.append(right_normed_bracket(pres.alphabet, pres.t_rank, xs))
    return out


def _wbar_letters(pres: HnnPresentation, max_len: int) -> list[Word]:
    """Complement-block letters t*X^b of length <= max_len, in ascending lex order."""
    letters = []
    for tail_len in range(max_len):
        for xs in _increasing_blocks(pres, list(pres.complement_ranks()), tail_len):
            letters.append(Word(pres.alphabet, (pres.t_rank,) + xs))
    letters.sort(key=cmp_to_key(lex_cmp))
    return letters


class _WbarView:
    """The letters t*X^b of bounded length as an alphabet of their own.

    Ordered purely lexicographically as words (so "t" is the greatest
    letter, being a prefix of all others) and carrying their word parities.
    """

    def __init__(self, pres: HnnPresentation, max_len: int):
        self.pres = pres
        self.letters = _wbar_letters(pres, max_len)
        self.alphabet = Alphabet(
            tuple(
                Symbol(i, str(w), w.parity) for i, w in enumerate(self.letters)
            )
        )
        self.rank_of = {w: i for i, w in enumerate(self.letters)}

    def split(self, w: Word) -> list[Word]:
        """Cut before every stable letter; each piece must be a known letter."""
        t = self.pres.t_rank
        letters = w.letters
        if not letters:
            return []
        if letters[0] != t:
            raise ValueError(f"{str(w)!r} does not start with the stable letter")
        cuts = [i for i, r in enumerate(letters) if r == t] + [len(letters)]
        pieces = []
        for lo, hi in zip(cuts, cuts[1:]):
            piece = w.sub(lo, hi)
            if piece not in self.rank_of:
                raise ValueError(f"{str(piece)!r} is not a complement-block letter")
            pieces.append(piece)
        return pieces

    def encode(self, pieces: Sequence[Word]) -> Word:
        return Word(self.alphabet, tuple(self.rank_of[p] for p in pieces))

    def concat(self, ranks: Sequence[int]) -> Word:
        out = Word(self.pres.alphabet, ())
        for r in ranks:
            out = out * self.letters[r]
        return out

    def substitute(self, m: NcMonomial) -> NcMonomial:
        """Replace each letter leaf by its left-combed bracketing over the base."""
        if m.is_leaf:
            piece = self.letters[m.rank]
            return right_normed_bracket(
                self.pres.alphabet, self.pres.t_rank, piece.letters[1:]
            )
        return NcMonomial.pair(self.substitute(m.left), self.substitute(m.right))

    def sequences_of_total_length(self, total: int) -> list[tuple[int, ...]]:
        """All rank tuples whose letter lengths sum to ``total``."""
        lengths = [len(w) for w in self.letters]
        out: list[tuple[int, ...]] = []

        def grow(prefix: list[int], remaining: int) -> None:
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for r, ln in enumerate(lengths):
                if ln <= remaining:
                    prefix.append(r)
                    grow(prefix, remaining - ln)
                    prefix.pop()

        grow([], total)
        return out


def enumerate_h_basis(pres: HnnPresentation, max_len: int) -> list[NcMonomial]:
    """Basis monomials of the extension up to ``max_len``, in deglex order.

    Leaves for the original basis symbols; the stable letter and, when odd,
    its self-bracket; and for every other reduced super-LS word the
    bracketing obtained by bracketing its complement-block letters
    standardly and substituting each letter's left-combed tree.  The
    underlying words are cross-checked against the reduced super-LS
    enumeration, and every monomial is checked admissible.
    """
    system = build_relations(pres)
    words = enumerate_reduced_super_ls(system, max_len)
    view = _WbarView(pres, max_len)
    t = pres.t_rank
    out: list[NcMonomial] = []
    for w in words:
        if t not in w.letters:
            if len(w) != 1:
                raise RuntimeError(
                    f"unexpected reduced super-LS word without the stable letter: {w}"
                )
            out.append(NcMonomial.leaf(pres.alphabet, w.letters[0]))
        elif all(r == t for r in w.letters):
            leaf = NcMonomial.leaf(pres.alphabet, t)
            out.append(leaf if len(w) == 1 else NcMonomial.pair(leaf, leaf))
        else:
            encoded = view.encode(view.split(w))
            out.append(view.substitute(standard_bracket(encoded)))
    for m, w in zip(out, words):
        if m.word != w or not is_admissible(m):
            raise RuntimeError(f"constructed monomial for {w} is not admissible")
    return out


# -- the structure theorem, degree by degree -------------------------------------


@dataclass(frozen=True)
class StructureLengthCheck:
    """The four degree-n checks of the direct-sum decomposition."""

    length: int
    products: int
    pattern_words: int
    bijection_ok: bool
    ls_transfer_ok: bool
    admissibility_ok: bool
    h_basis_count: int
    independent_rank: int
    rank_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.bijection_ok
            and self.ls_transfer_ok
            and self.admissibility_ok
            and self.rank_ok
        )

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "products": self.products,
            "pattern_words": self.pattern_words,
            "bijection_ok": self.bijection_ok,
            "ls_transfer_ok": self.ls_transfer_ok,
            "admissibility_ok": self.admissibility_ok,
            "h_basis_count": self.h_basis_count,
            "independent_rank": self.independent_rank,
            "rank_ok": self.rank_ok,
            "passed": self.passed,
        }


class StructureReport:
    """Per-degree verification that the extension splits off a free part."""

    __slots__ = ("max_len", "rows", "h_basis_counts", "passed")

    def __init__(
        self,
        max_len: int,
        rows: Sequence[StructureLengthCheck],
        h_basis_counts: Sequence[int],
    ):
        self.max_len = max_len
        self.rows = tuple(rows)
        self.h_basis_counts = tuple(h_basis_counts)
        self.passed = all(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_len": self.max_len,
            "h_basis_counts": list(self.h_basis_counts),
            "lengths": [r.to_dict() for r in self.rows],
        }

    def __str__(self) -> str:
        lines = [
            f"structure decomposition: {'PASS' if self.passed else 'FAIL'} "
            f"(degrees 1..{self.max_len})",
            "basis counts by degree: "
            + ", ".join(str(c) for c in self.h_basis_counts),
        ]
        for r in self.rows:
            lines.append(
                f"  degree {r.length}: products={r.products} pattern={r.pattern_words}"
                f" bijection={'ok' if r.bijection_ok else 'FAIL'}"
                f" ls-transfer={'ok' if r.ls_transfer_ok else 'FAIL'}"
                f" admissible={'ok' if r.admissibility_ok else 'FAIL'}"
                f" rank={r.independent_rank}/{r.h_basis_count}"
                f"{'' if r.rank_ok else ' FAIL'}"
            )
        return "\n".join(lines)


def verify_structure_theorem(pres: HnnPresentation, max_len: int) -> StructureReport:
    """Four independent checks at every degree n <= max_len.

    (i)   products of complement-block letters of total length n biject with
          the stable-letter-prefixed pattern words of length n, explicitly
          through the split-before-each-stable-letter map;
    (ii)  such a product is super-LS as a base word iff it is super-LS as a
          word over the block letters, lex-ordered;
    (iii) for every super-LS block word, the substituted bracketing is
          admissible over the base alphabet;
    (iv)  reduced expansions of all basis monomials up to n are linearly
          independent and count-match the basis enumeration.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    system = build_relations(pres)
    view = _WbarView(pres, max_len)
    rows: list[StructureLengthCheck] = []
    for n in range(1, max_len + 1):
        sequences = view.sequences_of_total_length(n)
        concats = [view.concat(seq) for seq in sequences]
        pattern = [
            PbwPattern((), middle, tail).word(pres)
            for middle, tail in _middle_shapes(pres, n)
        ]

        sequence_set = set(sequences)
        bijection_ok = (
            len(set(concats)) == len(sequences)
            and set(concats) == set(pattern)
            and all(
                view.encode(view.split(w)).letters in sequence_set for w in pattern
            )
        )

        ls_transfer_ok = True
        super_ls_sequences = []
        for seq, u in zip(sequences, concats):
            base_side = is_super_ls(u)
            block_side = is_super_ls(Word(view.alphabet, seq))
            if base_side != block_side:
                ls_transfer_ok = False
            if block_side:
                super_ls_sequences.append(seq)

        admissibility_ok = True
        for seq in super_ls_sequences:
            block_word = Word(view.alphabet, seq)
            monomial = view.substitute(standard_bracket(block_word))
            if not is_admissible(monomial):
                admissibility_ok = False

        basis = enumerate_h_basis(pres, n)
        vectors = [reduce(expand(m), system)[0] for m in basis]
        independent_rank, _ = rank(vectors)
        rank_ok = independent_rank == len(basis)

        rows.append(
            StructureLengthCheck(
                length=n,
                products=len(sequences),
                pattern_words=len(pattern),
                bijection_ok=bijection_ok,
                ls_transfer_ok=ls_transfer_ok,
                admissibility_ok=admissibility_ok,
                h_basis_count=len(basis),
                independent_rank=independent_rank,
                rank_ok=rank_ok,
            )
        )

    full_basis = enumerate_h_basis(pres, max_len)
    counts = [0] * max_len
    for m in full_basis:
        counts[len(m.word) - 1] += 1
    return StructureReport(max_len, rows, counts)


# -- presentation files -----------------------------------------------------------

_NAME_OK = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_"
_NAME_OK_TAIL = _NAME_OK + "0123456789"


def _valid_name(name: str) -> bool:
    return (
        bool(name)
        and name[0] in _NAME_OK
        and all(ch in _NAME_OK_TAIL for ch in name)
    )


def _parse_coeff(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{where}: coefficients must be exact (string or integer)")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{where}: bad rational {value!r} ({exc})") from None
    raise ValueError(f"{where}: bad coefficient {value!r}")


def _parse_value_list(entries, by_name: dict, where: str) -> dict[int, Fraction]:
    if not isinstance(entries, list):
        raise ValueError(f"{where}: expected a list of basis/coeff entries")
    out: dict[int, Fraction] = {}
    for i, entry in enumerate(entries):
        spot = f"{where}[{i}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{spot}: expected an object")
        basis = entry.get("basis")
        if basis not in by_name:
            raise ValueError(f"{spot}.basis: unknown generator {basis!r}")
        if "coeff" not in entry:
            raise ValueError(f"{spot}: missing coeff")
        coeff = _parse_coeff(entry["coeff"], f"{spot}.coeff")
        r = by_name[basis]
        out[r] = out.get(r, Fraction(0)) + coeff
    return out


def load_presentation(source: Union[str, Path, Mapping]) -> HnnPresentation:
    """Read a presentation from a JSON file or an equivalent mapping.

    Schema: generators (name/parity, increasing order, subalgebra first),
    subalgebra_size, d_parity, brackets (one orientation of each pair is
    enough), derivation (arguments must be subalgebra generators).  Unknown
    names are rejected with the offending location; non-reduced fractions
    are accepted and normalized.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{source}: invalid JSON ({exc})") from None
    else:
        data = dict(source)
    if not isinstance(data, dict):
        raise ValueError("presentation: expected a JSON object")

    gens = data.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ValueError("generators: expected a non-empty list")
    names, parities = [], []
    for i, g in enumerate(gens):
        if not isinstance(g, dict) or "name" not in g or "parity" not in g:
            raise ValueError(f"generators[{i}]: expected {{name, parity}}")
        name, parity = g["name"], g["parity"]
        if not isinstance(name, str) or not _valid_name(name):
            raise ValueError(f"generators[{i}].name: bad name {name!r}")
        if name in names:
            raise ValueError(f"generators[{i}].name: duplicate {name!r}")
        if parity not in (0, 1):
            raise ValueError(f"generators[{i}].parity: must be 0 or 1")
        names.append(name)
        parities.append(parity)
    alphabet = Alphabet(
        tuple(Symbol(i, n, p) for i, (n, p) in enumerate(zip(names, parities)))
    )
    by_name = {n: i for i, n in enumerate(names)}

    k = data.get("subalgebra_size")
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= len(names):
        raise ValueError(f"subalgebra_size: expected an integer in 0..{len(names)}")
    d_parity = data.get("d_parity")
    if d_parity not in (0, 1):
        raise ValueError("d_parity: must be 0 or 1")

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, entry in enumerate(data.get("brackets", [])):
        where = f"brackets[{i}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{where}: expected an object")
        left, right = entry.get("left"), entry.get("right")
        if left not in by_name:
            raise ValueError(f"{where}.left: unknown generator {left!r}")
        if right not in by_name:
            raise ValueError(f"{where}.right: unknown generator {right!r}")
        key = (by_name[left], by_name[right])
        if key in brackets:
            raise ValueError(f"{where}: duplicate bracket for ({left}, {right})")
        brackets[key] = _parse_value_list(entry.get("value", []), by_name, f"{where}.value")

    derivation: dict[int, dict[int, Fraction]] = {}
    for i, entry in enumerate(data.get("derivation", [])):
        where = f"derivation[{i}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{where}: expected an object")
        arg = entry.get("arg")
        if arg not in by_name:
            raise ValueError(f"{where}.arg: unknown generator {arg!r}")
        if by_name[arg] >= k:
            raise ValueError(
                f"{where}.arg: {arg!r} is not in the subalgebra (first {k} generators)"
            )
        if by_name[arg] in derivation:
            raise ValueError(f"{where}: duplicate derivation entry for {arg!r}")
        derivation[by_name[arg]] = _parse_value_list(
            entry.get("value", []), by_name, f"{where}.value"
        )

    constants = StructureConstants(alphabet, k, d_parity, brackets, derivation)
    return HnnPresentation(constants, t_name=data.get("stable_letter", "t"))


def presentation_to_dict(pres: HnnPresentation) -> dict:
    """The canonical mapping form of a presentation (inverse of the loader)."""
    sc = pres.constants
    return {
        "generators": [
            {"name": s.name, "parity": s.parity} for s in sc.alphabet.symbols
        ],
        "subalgebra_size": sc.subalgebra_size,
        "d_parity": sc.d_parity,
        "brackets": [
            {
                "left": sc.name(x),
                "right": sc.name(y),
                "value": [
                    {"basis": sc.name(v), "coeff": str(c)}
                    for v, c in sorted(coeffs.items())
                ],
            }
            for (x, y), coeffs in sorted(sc.alpha.items())
        ],
        "derivation": [
            {
                "arg": sc.name(a),
                "value": [
                    {"basis": sc.name(v), "coeff": str(c)}
                    for v, c in sorted(coeffs.items())
                ],
            }
            for a, coeffs in sorted(sc.beta.items())
        ],
        "stable_letter": pres.t_symbol.name,
    }
