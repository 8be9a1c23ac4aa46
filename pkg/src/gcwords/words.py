"""Words in the simple transpositions s_1..s_n and permutation arithmetic.

A word is a finite sequence of letters in [n]; it evaluates to a permutation
of {1..n+1}.  Permutations are plain tuples in one-line notation with values
1..m.  The product convention is fixed once and used everywhere:

    perm_of_word((i_1, ..., i_l)) = s_{i_1} * s_{i_2} * ... * s_{i_l}

where s_i is the transposition (i, i+1) and (u*v)(x) = u(v(x)).  Equivalently,
the product is built by left-multiplying value swaps, so

    >>> perm_of_word(Word(2, (1, 2, 1)))
    (3, 2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class DomainError(ValueError):
    """Input violates a documented precondition."""


Perm = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """A sequence of letters drawn from 1..rank.

    Words of the longest element of S_{rank+1} have length rank*(rank+1)/2,
    but arbitrary letter sequences are allowed here.
    """

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise DomainError(f"rank must be nonnegative, got {self.rank}")
        for pos, letter in enumerate(self.letters, start=1):
            if not 1 <= letter <= self.rank:
                raise DomainError(
                    f"letter {letter} at position {pos} out of range 1..{self.rank}"
                )

    def __str__(self) -> str:
        return ",".join(str(letter) for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def word(letters: Sequence[int], rank: int | None = None) -> Word:
    """Build a Word, inferring the rank from the largest letter if absent."""
    letters = tuple(letters)
    if rank is None:
        if not letters:
            raise DomainError("cannot infer the rank of an empty word")
        rank = max(letters)
    return Word(rank, letters)


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse the comma format, e.g. "1,2,1" -> Word(2, (1, 2, 1))."""
    text = text.strip()
    if not text:
        raise DomainError("empty word string")
    try:
        letters = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DomainError(f"malformed word string {text!r}") from None
    return word(letters, rank)


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def longest_element(m: int) -> Perm:
    """The order-reversing permutation m, m-1, ..., 1 of S_m."""
    return tuple(range(m, 0, -1))


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def parse_perm(text: str) -> Perm:
    """Parse bracketed one-line notation, e.g. "[4,3,2,1]"."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise DomainError(f"permutation must be bracketed one-line notation: {text!r}")
    try:
        p = tuple(int(part) for part in text[1:-1].split(","))
    except ValueError:
        raise DomainError(f"malformed permutation string {text!r}") from None
    if not is_permutation(p):
        raise DomainError(f"{text} is not a permutation of 1..{len(p)}")
    return p


def format_perm(p: Perm) -> str:
    return "[" + ",".join(str(v) for v in p) + "]"


def perm_of_word(w: Word) -> Perm:
    """Evaluate the product s_{i_1} ... s_{i_l} on {1..rank+1}.

    >>> perm_of_word(word([1, 3, 2, 1, 3, 2]))
    (4, 3, 2, 1)
    >>> perm_of_word(Word(3, ()))
    (1, 2, 3, 4)
    """
    p = list(range(1, w.rank + 2))
    for letter in w.letters:
        p[letter - 1], p[letter] = p[letter], p[letter - 1]
    return tuple(p)


def inversion_count(p: Perm) -> int:
    """Number of pairs i < j with p(i) > p(j), i.e. the Coxeter length.

    >>> inversion_count((4, 3, 2, 1))
    6
    """
    m = len(p)
    return sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])


def is_reduced(w: Word) -> bool:
    """True iff no shorter word evaluates to the same permutation.

    >>> is_reduced(word([1, 2, 1]))
    True
    >>> is_reduced(word([1, 1]))
    False
    """
    return len(w.letters) == inversion_count(perm_of_word(w))


def standard_word(n: int) -> Word:
    """The word (1, 2,1, 3,2,1, ..., n,n-1,...,1) of the longest element.

    >>> str(standard_word(3))
    '1,2,1,3,2,1'
    """
    if n < 1:
        raise DomainError(f"rank must be positive, got {n}")
    letters = []
    for k in range(1, n + 1):
        letters.extend(range(k, 0, -1))
    return Word(n, tuple(letters))


def flip_word(w: Word) -> Word:
    """The letter-flip involution i -> rank+1-i, applied letterwise."""
    return Word(w.rank, tuple(w.rank + 1 - letter for letter in w.letters))


def apply_2move(w: Word, pos: int) -> Word:
    """Swap the commuting letters at 1-based positions pos, pos+1.

    >>> str(apply_2move(word([1, 3, 2]), 1))
    '3,1,2'
    """
    if not 1 <= pos <= len(w.letters) - 1:
        raise DomainError(f"2-move position {pos} out of range")
    a, b = w.letters[pos - 1], w.letters[pos]
    if abs(a - b) <= 1:
        raise DomainError(f"letters {a},{b} at position {pos} do not commute")
    letters = list(w.letters)
    letters[pos - 1], letters[pos] = b, a
    return Word(w.rank, tuple(letters))


def apply_3move(w: Word, pos: int) -> Word:
    """Rewrite i,j,i -> j,i,j at 1-based positions pos..pos+2.

    >>> str(apply_3move(word([1, 2, 1]), 1))
    '2,1,2'
    """
    if not 1 <= pos <= len(w.letters) - 2:
        raise DomainError(f"3-move position {pos} out of range")
    a, b, c = w.letters[pos - 1 : pos + 2]
    if a != c or abs(a - b) != 1:
        raise DomainError(f"letters {a},{b},{c} at position {pos} admit no 3-move")
    letters = list(w.letters)
    letters[pos - 1 : pos + 2] = (b, a, b)
    return Word(w.rank, tuple(letters))


def legal_2moves(w: Word) -> list[int]:
    """Positions where a 2-move applies, scanned left to right."""
    return [
        pos
        for pos in range(1, len(w.letters))
        if abs(w.letters[pos - 1] - w.letters[pos]) > 1
    ]


def legal_3moves(w: Word) -> list[int]:
    """Positions where a 3-move applies, scanned left to right."""
    return [
        pos
        for pos in range(1, len(w.letters) - 1)
        if w.letters[pos - 1] == w.letters[pos + 1]
        and abs(w.letters[pos - 1] - w.letters[pos]) == 1
    ]


def _left_descents(p: Perm) -> Iterator[int]:
    # i is a left descent iff i+1 precedes i in one-line notation, i.e. the
    # word may start with the letter i.
    position = {value: index for index, value in enumerate(p)}
    for i in range(1, len(p)):
        if position[i] > position[i + 1]:
            yield i


def _swap_values(p: Perm, i: int) -> Perm:
    q = list(p)
    a, b = q.index(i), q.index(i + 1)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def enumerate_reduced_words(p: Perm) -> Iterator[Word]:
    """Every reduced word of p exactly once, in lexicographic order.

    Peels the first letter: the word may start with i exactly when s_i * p is
    shorter, and the tail is any reduced word of s_i * p.

    >>> [str(w) for w in enumerate_reduced_words((3, 2, 1))]
    ['1,2,1', '2,1,2']
    """
    if not is_permutation(p):
        raise DomainError(f"{p} is not a permutation")
    rank = max(len(p) - 1, 0)

    def rec(q: Perm) -> Iterator[tuple[int, ...]]:
        descents = list(_left_descents(q))
        if not descents:
            yield ()
            return
        for i in descents:
            for tail in rec(_swap_values(q, i)):
                yield (i,) + tail

    for letters in rec(p):
        yield Word(rank, letters)


@lru_cache(maxsize=None)
def _count_reduced_words(p: Perm) -> int:
    descents = list(_left_descents(p))
    if not descents:
        return 1
    return sum(_count_reduced_words(_swap_values(p, i)) for i in descents)


def count_reduced_words(p: Perm) -> int:
    """|R(p)| without materializing the words.

    >>> count_reduced_words((4, 3, 2, 1))
    16
    """
    if not is_permutation(p):
        raise DomainError(f"{p} is not a permutation")
    return _count_reduced_words(p)
