"""Ordered super-alphabets, associative words, and Lyndon-Shirshov recognition.

Two strict total orders on words over a fixed alphabet are used throughout
the package:

* ``lex_cmp`` -- lexicographic, with the convention that a proper prefix is
  GREATER than its extensions ("t" > "tx" > "txx").  This is the opposite of
  dictionary order.  Lyndon-Shirshov recognition, leading words and standard
  bracketings all depend on this convention, so it must not be "fixed".
* ``deglex_cmp`` -- by length first, ties broken by ``lex_cmp``.

A word is a Lyndon-Shirshov (LS) word when it is strictly greater, in the
lexicographic order above, than every proper cyclic rotation of itself.  A
super-LS word is an LS word, or a square ``uu`` where ``u`` is an odd LS
word.  Everything here is a pure value: alphabets, symbols and words are
immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class Symbol:
    """One generator: position in the alphabet order, display name, parity."""

    rank: int
    name: str
    parity: int

    def __post_init__(self) -> None:
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity!r}")
        if not self.name:
            raise ValueError("symbol name must be non-empty")

    @property
    def is_odd(self) -> bool:
        return self.parity == 1


class Alphabet:
    """An immutable, totally ordered set of symbols.

    Words carry a reference to their alphabet; two alphabets are considered
    the same when their (name, parity) sequences agree, so words remain
    comparable across independently constructed but identical alphabets.
    """

    __slots__ = ("symbols", "_by_name", "_key", "_hash", "_dotted")

    def __init__(self, symbols: Sequence[Symbol]):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must be non-empty")
        for i, s in enumerate(symbols):
            if s.rank != i:
                raise ValueError(
                    f"symbol ranks must be 0..{len(symbols) - 1} in order, "
                    f"got rank {s.rank} at position {i}"
                )
        names = [s.name for s in symbols]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate symbol names in {names}")
        self.symbols = symbols
        self._by_name = {s.name: s for s in symbols}
        self._key = tuple((s.name, s.parity) for s in symbols)
        self._hash = hash(self._key)
        self._dotted = any(len(s.name) > 1 for s in symbols)

    @classmethod
    def from_names(cls, names: Iterable[str], odd: Iterable[str] = ()) -> "Alphabet":
        """Build an alphabet from names in increasing order; ``odd`` marks parities."""
        odd = set(odd)
        names = list(names)
        unknown = odd - set(names)
        if unknown:
            raise ValueError(f"odd names not in alphabet: {sorted(unknown)}")
        return cls(
            tuple(
                Symbol(i, name, 1 if name in odd else 0)
                for i, name in enumerate(names)
            )
        )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, rank: int) -> Symbol:
        return self.symbols[rank]

    def symbol(self, name: str) -> Symbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"unknown symbol name {name!r}") from None

    def has_name(self, name: str) -> bool:
        return name in self._by_name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = [s.name + (":odd" if s.parity else "") for s in self.symbols]
        return f"Alphabet({', '.join(parts)})"

    # -- word construction -------------------------------------------------

    def empty_word(self) -> "Word":
        return Word(self, ())

    def word_of_ranks(self, ranks: Iterable[int]) -> "Word":
        return Word(self, tuple(ranks))

    def word_of_names(self, names: Iterable[str]) -> "Word":
        return Word(self, tuple(self.symbol(n).rank for n in names))

    def word(self, text: str) -> "Word":
        """Parse the textual form produced by ``str(word)``.

        Single-character alphabets join names with nothing ("txx"); alphabets
        with a multi-character name join with '.' ("t.x1.x1").  The token "1"
        denotes the empty word unless "1" is itself a symbol name.
        """
        text = text.strip()
        if text == "":
            return self.empty_word()
        if text == "1" and not self.has_name("1"):
            return self.empty_word()
        if self._dotted or "." in text:
            return self.word_of_names(text.split("."))
        return self.word_of_names(text)


class Word:
    """An associative word: a finite sequence of symbol ranks (maybe empty)."""

    __slots__ = ("alphabet", "letters", "_hash")

    def __init__(self, alphabet: Alphabet, letters: Sequence[int]):
        letters = tuple(letters)
        n = len(alphabet)
        for r in letters:
            if not 0 <= r < n:
                raise ValueError(f"letter rank {r} out of range for {alphabet!r}")
        self.alphabet = alphabet
        self.letters = letters
        self._hash = hash((alphabet._key, letters))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def parity(self) -> int:
        return sum(self.alphabet.symbols[r].parity for r in self.letters) & 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.letters == other.letters
            and self.alphabet == other.alphabet
        )

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        """Concatenation."""
        _check_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def sub(self, start: int, stop: int) -> "Word":
        return Word(self.alphabet, self.letters[start:stop])

    def names(self) -> tuple[str, ...]:
        return tuple(self.alphabet.symbols[r].name for r in self.letters)

    def __str__(self) -> str:
        sep = "." if self.alphabet._dotted else ""
        return sep.join(self.names())

    def __repr__(self) -> str:
        return f"Word({str(self) or '1'})"


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("words over different alphabets")


def lex_cmp(u: Word, v: Word) -> int:
    """Compare words lexicographically; returns -1, 0 or 1.

    At the first differing position the smaller symbol loses.  When one word
    is a proper prefix of the other, the PREFIX is the greater word; in
    particular the empty word is greater than every non-empty word.
    """
    _check_same_alphabet(u, v)
    a, b = u.letters, v.letters
    for x, y in zip(a, b):
        if x != y:
            return LT if x < y else GT
    if len(a) == len(b):
        return EQ
    return GT if len(a) < len(b) else LT


def deglex_cmp(u: Word, v: Word) -> int:
    """Length-first comparison; equal lengths fall back to ``lex_cmp``."""
    _check_same_alphabet(u, v)
    if len(u.letters) != len(v.letters):
        return LT if len(u.letters) < len(v.letters) else GT
    # equal lengths: lex reduces to plain tuple order
    if u.letters == v.letters:
        return EQ
    return LT if u.letters < v.letters else GT


def deglex_key(w: Word) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing ascending deglex order."""
    return (len(w.letters), w.letters)


def is_lyndon_shirshov(w: Word) -> bool:
    """True iff ``w`` is strictly greater than each of its proper rotations."""
    if not w.letters:
        raise ValueError("the empty word is not eligible")
    n = len(w.letters)
    for k in range(1, n):
        rotation = Word(w.alphabet, w.letters[k:] + w.letters[:k])
        if lex_cmp(w, rotation) != GT:
            return False
    return True


def is_super_ls(w: Word) -> bool:
    """True iff ``w`` is LS, or ``w = uu`` with ``u`` an odd LS word."""
    if not w.letters:
        raise ValueError("the empty word is not eligible")
    if is_lyndon_shirshov(w):
        return True
    n = len(w.letters)
    if n % 2:
        return False
    u = Word(w.alphabet, w.letters[: n // 2])
    if u.letters != w.letters[n // 2 :]:
        return False
    return u.parity == 1 and is_lyndon_shirshov(u)


def enumerate_super_ls(
    alphabet: Alphabet,
    max_len: int,
    constraint: Optional[Callable[[Word], bool]] = None,
) -> list[Word]:
    """All super-LS words of length <= max_len passing ``constraint``, in deglex order.

    Brute-force generation plus filtering; fine at desk scale (alphabets of a
    handful of symbols, lengths below ~8).
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    out = []
    size = len(alphabet)
    for n in range(1, max_len + 1):
        for ranks in product(range(size), repeat=n):
            w = Word(alphabet, ranks)
            if is_super_ls(w) and (constraint is None or constraint(w)):
                out.append(w)
    return out
