"""Non-associative monomials: bracketings of words and their expansions.

An :class:`NcMonomial` is a binary tree with symbols at the leaves; reading
the leaves left to right recovers an associative word (``forget``).  Every
super-Lyndon-Shirshov word carries exactly one bracketing satisfying the
recursive Lyndon-Shirshov monomial condition; ``standard_bracket`` computes
it by repeatedly splitting off the longest proper LS suffix (and splitting a
square ``uu`` in the middle).  A bracketing of a super-LS word ``w`` is
*admissible* when its expansion under the superbracket has leading word ``w``
with the same leading coefficient as the standard bracketing (1 for LS words,
2 for odd squares).  Any admissible bracketing may replace the standard one
as a basis; ``is_admissible`` checks user-supplied trees.
"""

from __future__ import annotations

from typing import Sequence, Union

from .poly import Poly, superbracket
from .words import (
    GT,
    Alphabet,
    Symbol,
    Word,
    is_lyndon_shirshov,
    is_super_ls,
    lex_cmp,
)


class NcMonomial:
    """A non-associative word: a leaf symbol or a pair of monomials."""

    __slots__ = ("alphabet", "rank", "left", "right", "_word", "_hash")

    def __init__(self, alphabet, rank, left, right, word):
        # internal; use the leaf/pair constructors
        self.alphabet = alphabet
        self.rank = rank
        self.left = left
        self.right = right
        self._word = word
        if rank is not None:
            self._hash = hash((alphabet, "leaf", rank))
        else:
            self._hash = hash((alphabet, "pair", left._hash, right._hash))

    @classmethod
    def leaf(cls, alphabet: Alphabet, symbol: Union[Symbol, int]) -> "NcMonomial":
        rank = symbol.rank if isinstance(symbol, Symbol) else symbol
        word = Word(alphabet, (rank,))
        return cls(alphabet, rank, None, None, word)

    @classmethod
    def pair(cls, left: "NcMonomial", right: "NcMonomial") -> "NcMonomial":
        if left.alphabet != right.alphabet:
            raise ValueError("monomials over different alphabets")
        word = left._word * right._word
        return cls(left.alphabet, None, left, right, word)

    @property
    def is_leaf(self) -> bool:
        return self.rank is not None

    @property
    def word(self) -> Word:
        return self._word

    @property
    def parity(self) -> int:
        return self._word.parity

    def __len__(self) -> int:
        return len(self._word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcMonomial):
            return NotImplemented
        if self.alphabet != other.alphabet or self.rank != other.rank:
            return False
        if self.is_leaf:
            return True
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self.is_leaf:
            return self.alphabet.symbols[self.rank].name
        return f"[{self.left},{self.right}]"

    def __repr__(self) -> str:
        return f"NcMonomial({self})"


def forget(m: NcMonomial) -> Word:
    """The associative word obtained by erasing all brackets."""
    return m.word


def expand(m: NcMonomial) -> Poly:
    """Evaluate the tree in the free associative superalgebra."""
    if m.is_leaf:
        return Poly.monomial(m.word)
    return superbracket(expand(m.left), expand(m.right))


def is_ls_monomial(m: NcMonomial) -> bool:
    """Recursive Lyndon-Shirshov monomial test.

    A leaf qualifies; a pair (u1, u2) qualifies when u1 > u2 on underlying
    words, both halves qualify, and (if u1 = (v1, v2)) v2 <= u2.
    """
    if m.is_leaf:
        return True
    u1, u2 = m.left, m.right
    if lex_cmp(u1.word, u2.word) != GT:
        return False
    if not is_ls_monomial(u1) or not is_ls_monomial(u2):
        return False
    if not u1.is_leaf and lex_cmp(u1.right.word, u2.word) == GT:
        return False
    return True


def is_super_ls_monomial(m: NcMonomial) -> bool:
    """LS monomial, or (u, u) with u an odd LS monomial."""
    if is_ls_monomial(m):
        return True
    if m.is_leaf:
        return False
    return m.left == m.right and m.left.parity == 1 and is_ls_monomial(m.left)


def standard_bracket(w: Word) -> NcMonomial:
    """The unique super-LS monomial whose leaves spell ``w``.

    LS words of length > 1 split as w = uv with v the longest proper LS
    suffix; squares uu (u odd LS) split in the middle.
    """
    if not is_super_ls(w):
        raise ValueError(f"not a super-Lyndon-Shirshov word: {str(w)!r}")
    return _standard(w)


def _standard(w: Word) -> NcMonomial:
    letters = w.letters
    if len(letters) == 1:
        return NcMonomial.leaf(w.alphabet, letters[0])
    if is_lyndon_shirshov(w):
        for i in range(1, len(letters)):
            v = Word(w.alphabet, letters[i:])
            if is_lyndon_shirshov(v):
                u = Word(w.alphabet, letters[:i])
                return NcMonomial.pair(_standard(u), _standard(v))
        raise AssertionError("unreachable: a final letter is always LS")
    half = _standard(Word(w.alphabet, letters[: len(letters) // 2]))
    return NcMonomial.pair(half, half)


def is_admissible(m: NcMonomial) -> bool:
    """Expansion has leading word forget(m) with the standard coefficient.

    The underlying word must be super-LS; the required coefficient is 1 for
    an LS word and 2 for an odd square.
    """
    w = m.word
    if not is_super_ls(w):
        raise ValueError(f"underlying word is not super-Lyndon-Shirshov: {str(w)!r}")
    expected = 1 if is_lyndon_shirshov(w) else 2
    e = expand(m)
    if e.is_zero():
        return False
    lead_word, lead_coeff = e.leading()
    return lead_word == w and lead_coeff == expected


def right_normed_bracket(
    alphabet: Alphabet,
    head: Union[Symbol, int],
    xs: Sequence[Union[Symbol, int]],
) -> NcMonomial:
    """The left-combed tree [...[[head, x1], x2], ..., xs].

    The tail ranks must be weakly increasing, strictly below the head's rank,
    with odd symbols appearing at most once; under those conditions the
    result is the standard bracketing of head*x1*...*xs.
    """
    head_rank = head.rank if isinstance(head, Symbol) else head
    ranks = [x.rank if isinstance(x, Symbol) else x for x in xs]
    for prev, cur in zip(ranks, ranks[1:]):
        if prev > cur:
            raise ValueError("tail symbols must be weakly increasing")
    for r in ranks:
        if r >= head_rank:
            raise ValueError("tail symbols must be strictly below the head")
    odd_counts: dict[int, int] = {}
    for r in ranks:
        if alphabet.symbols[r].parity == 1:
            odd_counts[r] = odd_counts.get(r, 0) + 1
            if odd_counts[r] > 1:
                raise ValueError("odd tail symbols may appear at most once")
    m = NcMonomial.leaf(alphabet, head_rank)
    for r in ranks:
        m = NcMonomial.pair(m, NcMonomial.leaf(alphabet, r))
    return m


# -- text form -----------------------------------------------------------------


def parse_monomial(alphabet: Alphabet, text: str) -> NcMonomial:
    """Parse the "[u,v]" nesting syntax with symbol names at the leaves."""
    pos = 0

    def parse() -> NcMonomial:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            raise ValueError(f"unexpected end of monomial text {text!r}")
        if text[pos] == "[":
            pos += 1
            left = parse()
            expect(",")
            right = parse()
            expect("]")
            return NcMonomial.pair(left, right)
        start = pos
        while pos < len(text) and text[pos] not in "[],":
            pos += 1
        name = text[start:pos].strip()
        if not name:
            raise ValueError(f"missing symbol name at offset {start} in {text!r}")
        return NcMonomial.leaf(alphabet, alphabet.symbol(name))

    def expect(ch: str) -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text) or text[pos] != ch:
            raise ValueError(f"expected {ch!r} at offset {pos} in {text!r}")
        pos += 1

    m = parse()
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ValueError(f"trailing characters at offset {pos} in {text!r}")
    return m
