"""
Word arithmetic for Kiselman semigroups
Kₙ 단어(word) 연산 모듈

Standard conventions:
- Letters are 1-based integers ``1..n``; letter ``i`` stands for the generator a_i.
- The empty word is the unit e.
- Every word and content carries its rank ``n`` so that mixing ranks is an error.
- Text syntax: ``"3,4,2,1,3,2"``; digit shorthand ``"342132"`` when n ≤ 9; ``""`` is e.
"""

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from .errors import LetterOutOfRangeError, RankMismatchError, WordParseError

# Global configuration
MAX_RANK = 16  # words and contents; enumeration is practical far below this


def check_rank(n: int) -> int:
    """
    Validate a rank and return it as ``int``.

    :param n: number of generators
    :type n: int
    :return: the validated rank
    :rtype: int
    :raises LetterOutOfRangeError: if ``n`` is not in ``1..MAX_RANK``
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise LetterOutOfRangeError(f"Rank must be an integer, got {n!r}")
    if not 1 <= n <= MAX_RANK:
        raise LetterOutOfRangeError(f"Rank must be in 1..{MAX_RANK}, got {n}")
    return n


def check_letter(i: int, n: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise LetterOutOfRangeError(f"Letter {i!r} is outside 1..{n}")
    return i


@dataclass(frozen=True)
class Content:
    """
    Subset of ``{1..n}`` stored as a bitset (bit ``i-1`` stands for letter ``i``).

    Contents form the union semilattice onto which the content map sends Kₙ.
    Iteration yields letters in increasing order.
    """

    bits: int
    rank: int

    def __post_init__(self):
        check_rank(self.rank)
        if self.bits < 0 or self.bits >> self.rank:
            raise LetterOutOfRangeError(
                f"Content bits {self.bits:#b} exceed rank {self.rank}"
            )

    @classmethod
    def from_letters(cls, letters: Iterable[int], n: int) -> "Content":
        bits = 0
        for i in letters:
            bits |= 1 << (check_letter(i, n) - 1)
        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> "Content":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "Content":
        return cls((1 << n) - 1, n)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.rank + 1) if self.bits >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 1 <= i <= self.rank and bool(self.bits >> (i - 1) & 1)

    def _same_rank(self, other: "Content") -> None:
        if not isinstance(other, Content):
            raise TypeError(f"Expected Content, got {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatchError(f"Contents of rank {self.rank} and {other.rank}")

    def __or__(self, other: "Content") -> "Content":
        self._same_rank(other)
        return Content(self.bits | other.bits, self.rank)

    def __and__(self, other: "Content") -> "Content":
        self._same_rank(other)
        return Content(self.bits & other.bits, self.rank)

    def __sub__(self, other: "Content") -> "Content":
        self._same_rank(other)
        return Content(self.bits & ~other.bits, self.rank)

    def issubset(self, other: "Content") -> bool:
        self._same_rank(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def complement(self) -> "Content":
        return Content(((1 << self.rank) - 1) & ~self.bits, self.rank)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.letters) + "}"


def all_contents(n: int) -> List[Content]:
    """Return the 2ⁿ subsets of ``{1..n}`` in bitmask order (∅ first, full set last)."""
    check_rank(n)
    return [Content(bits, n) for bits in range(1 << n)]


@dataclass(frozen=True)
class Word:
    """
    Finite word over the letters ``1..n``.

    Concatenation is ``+``; slicing returns a Word of the same rank.

    Example:
        >>> w = Word((2, 1), 3) + Word((3, 2), 3)
        >>> str(w)
        '2,1,3,2'
    """

    letters: Tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        check_rank(self.rank)
        for i in self.letters:
            check_letter(i, self.rank)

    @classmethod
    def unit(cls, n: int) -> "Word":
        return cls((), n)

    @classmethod
    def generator(cls, n: int, i: int) -> "Word":
        return cls((check_letter(i, check_rank(n)),), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key: Union[int, slice]):
        if isinstance(key, slice):
            return Word(self.letters[key], self.rank)
        return self.letters[key]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(
                f"Cannot concatenate words of rank {self.rank} and {other.rank}"
            )
        return Word(self.letters + other.letters, self.rank)

    def __str__(self) -> str:
        return format_word(self)


# =============================================================================
# Text syntax
# =============================================================================

def format_word(w: Word) -> str:
    """Comma-separated letters; the unit prints as the empty string."""
    return ",".join(str(i) for i in w.letters)


def _is_decimal(token: str) -> bool:
    # ASCII digits only
    return token.isascii() and token.isdigit()


def _parse_letters(text: str, n: int, what: str) -> List[int]:
    text = text.strip()
    if not text:
        return []

    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    elif _is_decimal(text) and n <= 9:
        tokens = list(text)
    else:
        # n > 9: no shorthand, a bare token is a single letter
        tokens = [text]

    letters = []
    for token in tokens:
        if not _is_decimal(token):
            raise WordParseError(f"Cannot parse {what} {text!r}: bad token {token!r}")
        letters.append(int(token))

    for i in letters:
        if not 1 <= i <= n:
            raise LetterOutOfRangeError(f"Letter {i} in {what} {text!r} is outside 1..{n}")
    return letters


def parse_word(text: str, n: int) -> Word:
    """
    Parse the textual word syntax.

    :param text: ``"3,4,2,1,3,2"``, digit shorthand ``"342132"`` (n ≤ 9 only), or ``""`` for e
    :type text: str
    :param n: rank
    :type n: int
    :return: the parsed word
    :rtype: Word
    :raises WordParseError: if a token is not a decimal number
    :raises LetterOutOfRangeError: if a letter exceeds ``n``

    Example:
        >>> parse_word("1,2,1", 2).letters
        (1, 2, 1)
        >>> parse_word("121", 2).letters
        (1, 2, 1)
    """
    check_rank(n)
    return Word(tuple(_parse_letters(text, n, "word")), n)


def parse_content(text: str, n: int) -> Content:
    """Parse a comma-separated letter set; ``""`` is ∅. Repeats are allowed."""
    check_rank(n)
    return Content.from_letters(_parse_letters(text, n, "content"), n)


# =============================================================================
# Word functions
# =============================================================================

def content(w: Word) -> Content:
    """Set of letters occurring in ``w``."""
    return Content.from_letters(w.letters, w.rank)


def multiplicity(w: Word, i: int) -> int:
    return w.letters.count(i)


def is_canonical(w: Word) -> bool:
    """
    True iff between any two occurrences of a letter ``i`` there is a letter
    greater than ``i`` and a letter smaller than ``i``.

    Only consecutive occurrences are inspected. If some pair of occurrences
    violates the condition, its gap lacks the larger or the smaller side,
    and every consecutive pair inside it lacks the same side.
    """
    last = {}
    letters = w.letters
    for pos, i in enumerate(letters):
        if i in last:
            gap = letters[last[i] + 1:pos]
            if not (any(j > i for j in gap) and any(j < i for j in gap)):
                return False
        last[i] = pos
    return True


def length_bound(n: int) -> int:
    """
    Maximal length of a canonical word over ``n`` letters.

    L(2k) = 2^(k+1) - 2, L(2k+1) = 3·2^k - 2.
    """
    check_rank(n)
    k, odd = divmod(n, 2)
    if odd:
        return 3 * 2 ** k - 2
    return 2 ** (k + 1) - 2


def letter_multiplicity_bounds(n: int) -> List[int]:
    """
    Per-letter occurrence caps in a canonical word.

    Letter ``i`` occurs at most 2^(i-1) times for i ≤ ⌈n/2⌉ and at most
    2^(n-i) times otherwise. The caps add up to :func:`length_bound`.

    :return: list whose entry ``i-1`` is the cap of letter ``i``
    """
    check_rank(n)
    half = (n + 1) // 2
    return [2 ** (i - 1) if i <= half else 2 ** (n - i) for i in range(1, n + 1)]


def delete_letter(w: Word, i: int) -> Word:
    """Remove every occurrence of letter ``i``."""
    check_letter(i, w.rank)
    return Word(tuple(j for j in w.letters if j != i), w.rank)


def sharpness_word(n: int) -> Word:
    """
    Canonical word of maximal length L(n).

    With k = ⌈n/2⌉ the blocks are (j, n-j+1) for j < k and (k, n-k+1) or (k,)
    depending on the parity of n. Starting from the first block, each round
    wraps every block of the previous word in copies of the next block.
    """
    check_rank(n)
    k = (n + 1) // 2
    blocks = [(j, n - j + 1) for j in range(1, k)]
    blocks.append((k, n - k + 1) if n % 2 == 0 else (k,))

    current = [blocks[0]]
    for block in blocks[1:]:
        wrapped = [block]
        for b in current:
            wrapped.extend((b, block))
        current = wrapped

    return Word(tuple(i for b in current for i in b), n)


def random_word(n: int, max_length: int, rng: Optional[random.Random] = None) -> Word:
    """Word of uniform length in ``0..max_length`` with uniform letters."""
    check_rank(n)
    rng = rng or random.Random()
    length = rng.randint(0, max_length)
    return Word(tuple(rng.randint(1, n) for _ in range(length)), n)
