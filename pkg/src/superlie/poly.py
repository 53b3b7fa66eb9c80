"""Free associative superalgebra over the rationals.

A :class:`Poly` is a finitely supported map from words to exact rationals.
The product concatenates words bilinearly, and the superbracket is

    [p, q] = p*q - (-1)^{|p||q|} q*p

for parity-homogeneous p, q, extended bilinearly over homogeneous parts.
All arithmetic is exact (``fractions.Fraction``); nothing is ever rounded.
Terms are kept in descending deglex order so equality, hashing and the
leading term are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .words import Alphabet, Word, deglex_key

EVEN = "even"
ODD = "odd"
MIXED = "mixed"

Scalar = Union[int, Fraction]


def _to_fraction(value) -> Fraction:
    # exactness is the contract; never accept floats silently
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


class Poly:
    """An element of the free associative superalgebra: sum of words."""

    __slots__ = ("alphabet", "_terms", "_lookup", "_hash")

    def __init__(
        self,
        alphabet: Alphabet,
        terms: Union[Mapping[Word, Scalar], Iterable[tuple[Word, Scalar]]] = (),
    ):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            if word.alphabet != alphabet:
                raise ValueError("term word over a different alphabet")
            c = acc.get(word, _ZERO) + _to_fraction(coeff)
            if c:
                acc[word] = c
            elif word in acc:
                del acc[word]
        self.alphabet = alphabet
        self._lookup = acc
        self._terms = tuple(
            sorted(acc.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)
        )
        self._hash = hash((alphabet, self._terms))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "Poly":
        return cls(alphabet, ())

    @classmethod
    def monomial(cls, word: Word, coeff: Scalar = 1) -> "Poly":
        return cls(word.alphabet, ((word, coeff),))

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str) -> "Poly":
        return cls.monomial(Word(alphabet, (alphabet.symbol(name).rank,)))

    @classmethod
    def one(cls, alphabet: Alphabet) -> "Poly":
        return cls.monomial(alphabet.empty_word())

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> tuple[tuple[Word, Fraction], ...]:
        """Terms in descending deglex order (leading first)."""
        return self._terms

    def words(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._lookup.get(word, _ZERO)

    def leading(self) -> tuple[Word, Fraction]:
        """The deglex-maximal supported word and its coefficient."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return self._terms[0]

    def parity(self) -> str:
        """EVEN / ODD when all supported words agree, MIXED otherwise; 0 is EVEN."""
        seen = {w.parity for w, _ in self._terms}
        if len(seen) > 1:
            return MIXED
        if not seen or seen == {0}:
            return EVEN
        return ODD

    def even_part(self) -> "Poly":
        return Poly(self.alphabet, [(w, c) for w, c in self._terms if w.parity == 0])

    def odd_part(self) -> "Poly":
        return Poly(self.alphabet, [(w, c) for w, c in self._terms if w.parity == 1])

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        acc = dict(self._lookup)
        for w, c in other._terms:
            acc[w] = acc.get(w, _ZERO) + c
        return Poly(self.alphabet, acc)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        acc = dict(self._lookup)
        for w, c in other._terms:
            acc[w] = acc.get(w, _ZERO) - c
        return Poly(self.alphabet, acc)

    def __neg__(self) -> "Poly":
        return Poly(self.alphabet, [(w, -c) for w, c in self._terms])

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, Poly):
            self._check_compatible(other)
            acc: dict[Word, Fraction] = {}
            for u, cu in self._terms:
                for v, cv in other._terms:
                    w = u * v
                    acc[w] = acc.get(w, _ZERO) + cu * cv
            return Poly(self.alphabet, acc)
        c = _to_fraction(other)
        return Poly(self.alphabet, [(w, c * k) for w, k in self._terms])

    def __rmul__(self, other: Scalar) -> "Poly":
        return self.__mul__(other)

    def make_monic(self) -> "Poly":
        """Scale so the leading coefficient becomes exactly 1."""
        _, c = self.leading()
        if c == 1:
            return self
        return self * (Fraction(1) / c)

    def __truediv__(self, c: Scalar) -> "Poly":
        c = _to_fraction(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def _check_compatible(self, other: "Poly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("polynomials over different alphabets")

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.alphabet == other.alphabet
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return poly_to_text(self)

    def __repr__(self) -> str:
        return f"Poly({poly_to_text(self)})"


_ZERO = Fraction(0)


def scale(c: Scalar, p: Poly) -> Poly:
    return p * c


def superbracket(p: Poly, q: Poly) -> Poly:
    """[p, q] = pq - (-1)^{|p||q|} qp, extended bilinearly over parities."""
    if p.alphabet != q.alphabet:
        raise ValueError("polynomials over different alphabets")
    out = Poly.zero(p.alphabet)
    for hp, pp in ((p.even_part(), 0), (p.odd_part(), 1)):
        if hp.is_zero():
            continue
        for hq, pq in ((q.even_part(), 0), (q.odd_part(), 1)):
            if hq.is_zero():
                continue
            sign = -1 if (pp and pq) else 1
            out = out + (hp * hq) - sign * (hq * hp)
    return out


# -- text form ----------------------------------------------------------------
#
# A polynomial prints as a signed sum of terms "c*word" with exact rational c
# ("p/q" or an integer); a coefficient of +-1 is suppressed, and the empty
# word renders as "1".  Parsing accepts exactly this grammar (whitespace
# around '+'/'-' optional) and round-trips with printing.


def _term_to_text(word: Word, coeff: Fraction) -> str:
    wtext = str(word) if word.letters else "1"
    if coeff == 1 and word.letters:
        return wtext
    if not word.letters:
        return str(coeff)
    return f"{coeff}*{wtext}"


def poly_to_text(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, (word, coeff) in enumerate(p.terms()):
        mag = _term_to_text(word, abs(coeff))
        if i == 0:
            parts.append(mag if coeff > 0 else f"-{mag}")
        else:
            parts.append(f"{' + ' if coeff > 0 else ' - '}{mag}")
    return "".join(parts)


def parse_poly(alphabet: Alphabet, text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return Poly.zero(alphabet)
    terms: list[tuple[Word, Fraction]] = []
    # split into signed chunks at top level; no parentheses in this grammar
    chunks: list[tuple[int, str]] = []
    sign, buf = 1, []
    for i, ch in enumerate(text):
        if ch in "+-" and (i == 0 or text[i - 1] != "/"):
            piece = "".join(buf).strip()
            if piece:
                chunks.append((sign, piece))
            sign, buf = (1 if ch == "+" else -1), []
        else:
            buf.append(ch)
    piece = "".join(buf).strip()
    if piece:
        chunks.append((sign, piece))
    if not chunks:
        raise ValueError(f"cannot parse polynomial {text!r}")
    for sign, piece in chunks:
        if "*" in piece:
            coeff_text, word_text = piece.split("*", 1)
            coeff = Fraction(coeff_text.strip())
            word = alphabet.word(word_text.strip())
        else:
            try:
                coeff = Fraction(piece)
                word = alphabet.empty_word()
            except ValueError:
                coeff = Fraction(1)
                word = alphabet.word(piece)
        terms.append((word, sign * coeff))
    return Poly(alphabet, terms)
