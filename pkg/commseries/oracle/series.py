"""
Truncated series: explicit coefficients for all words up to a length bound
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from commseries.errors import AlphabetError, UnknownSymbolError, WindowError
from commseries.utils import RationalLike, Word, format_rational, format_word, to_fraction, words_up_to

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    """
    A series known on all words of length at most max_len.

    Absent words have coefficient 0; no stored word is longer than max_len.
    Two truncations are equal when they agree up to the smaller bound.

    Attributes:
        alphabet: The letters, in enumeration order
        max_len: The length bound L
        coeffs: Nonzero coefficients
    """

    alphabet: Tuple[str, ...]
    max_len: int
    coeffs: Mapping[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: Dict[Word, Fraction] = {}
        letters = set(self.alphabet)
        for word, value in self.coeffs.items():
            word = tuple(word)
            if len(word) > self.max_len:
                continue
            for letter in word:
                if letter not in letters:
                    raise UnknownSymbolError(f"Letter {letter!r} is not in {list(self.alphabet)}")
            value = to_fraction(value)
            if value:
                cleaned[word] = value
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_words(
        cls,
        alphabet: Sequence[str],
        max_len: int,
        terms: Mapping[str, RationalLike],
    ) -> "TruncatedSeries":
        """
        Build a truncation from words written as strings of single-character letters.

        >>> TruncatedSeries.from_words("ab", 3, {"ab": 1}).coefficient(("a", "b"))
        Fraction(1, 1)
        """
        return cls(tuple(alphabet), max_len, {tuple(w): c for w, c in terms.items()})

    @classmethod
    def zero(cls, alphabet: Sequence[str], max_len: int) -> "TruncatedSeries":
        return cls(tuple(alphabet), max_len, {})

    @classmethod
    def one(cls, alphabet: Sequence[str], max_len: int) -> "TruncatedSeries":
        """The shuffle identity 1·ε."""
        return cls(tuple(alphabet), max_len, {(): Fraction(1)})

    @classmethod
    def ones(cls, alphabet: Sequence[str], max_len: int) -> "TruncatedSeries":
        """The Hadamard identity 𝟙, mapping every word to 1."""
        return cls(tuple(alphabet), max_len, {w: Fraction(1) for w in words_up_to(alphabet, max_len)})

    def coefficient(self, word: Sequence[str]) -> Fraction:
        word = tuple(word)
        if len(word) > self.max_len:
            raise WindowError(f"Word of length {len(word)} beyond the window {self.max_len}")
        return self.coeffs.get(word, Fraction(0))

    def words(self) -> Iterator[Word]:
        """All words of the window in shortlex order."""
        return words_up_to(self.alphabet, self.max_len)

    def restrict(self, max_len: int) -> "TruncatedSeries":
        return TruncatedSeries(self.alphabet, min(max_len, self.max_len), self.coeffs)

    def common_window(self, other: "TruncatedSeries") -> int:
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"Alphabets {list(self.alphabet)} and {list(other.alphabet)} differ")
        return min(self.max_len, other.max_len)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.alphabet != other.alphabet:
            return False
        bound = min(self.max_len, other.max_len)
        mine = {w: c for w, c in self.coeffs.items() if len(w) <= bound}
        theirs = {w: c for w, c in other.coeffs.items() if len(w) <= bound}
        return mine == theirs

    __hash__ = None

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = self.common_window(other)
        total: Dict[Word, Fraction] = defaultdict(Fraction)
        for series in (self, other):
            for word, value in series.coeffs.items():
                total[word] += value
        return TruncatedSeries(self.alphabet, bound, total)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = to_fraction(c)
        return TruncatedSeries(self.alphabet, self.max_len, {w: c * v for w, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for word in self.words():
            value = self.coeffs.get(word)
            if value is None:
                continue
            label = "".join(word) if all(len(a) == 1 for a in word) else format_word(word)
            label = label or "ε"
            parts.append(f"{format_rational(value)}·{label}")
        return " + ".join(parts)


def left_derivative(f: TruncatedSeries, letter: str) -> TruncatedSeries:
    """
    Strip letter from the front: [w](∂ₐf) = [a·w]f, with the window shrinking by one.

    Raises:
        WindowError: If the window is empty
        UnknownSymbolError: If the letter is not in the alphabet
    """
    _check_letter(f, letter)
    return TruncatedSeries(
        f.alphabet,
        f.max_len - 1,
        {w[1:]: v for w, v in f.coeffs.items() if w and w[0] == letter},
    )


def right_derivative(f: TruncatedSeries, letter: str) -> TruncatedSeries:
    """Strip letter from the back: [w](f∂ₐ) = [w·a]f, with the window shrinking by one."""
    _check_letter(f, letter)
    return TruncatedSeries(
        f.alphabet,
        f.max_len - 1,
        {w[:-1]: v for w, v in f.coeffs.items() if w and w[-1] == letter},
    )


def _check_letter(f: TruncatedSeries, letter: str) -> None:
    if f.max_len < 1:
        raise WindowError("Cannot take a derivative of a truncation with window 0")
    if letter not in f.alphabet:
        raise UnknownSymbolError(f"Letter {letter!r} is not in {list(f.alphabet)}")


def parikh(word: Sequence[str], alphabet: Sequence[str]) -> Tuple[int, ...]:
    """
    The commutative image of a word: the number of occurrences of each letter.

    >>> parikh(("a1", "a1", "a2"), ("a1", "a2"))
    (2, 1)
    """
    index = {letter: i for i, letter in enumerate(alphabet)}
    counts = [0] * len(alphabet)
    for letter in word:
        if letter not in index:
            raise UnknownSymbolError(f"Letter {letter!r} is not in {list(alphabet)}")
        counts[index[letter]] += 1
    return tuple(counts)


@dataclass(frozen=True)
class CommutativityViolation:
    """Two Parikh-equivalent words with different coefficients."""

    u: Word
    v: Word
    f_u: Fraction
    f_v: Fraction


def commutative_up_to(f: TruncatedSeries) -> Optional[CommutativityViolation]:
    """
    Check that coefficients only depend on the commutative image within the window.

    Args:
        f: The truncation

    Returns:
        None if every Parikh class is constant, otherwise the first violation
        in shortlex order, compared against the first word of its class
    """
    first: Dict[Tuple[int, ...], Word] = {}
    for word in f.words():
        image = parikh(word, f.alphabet)
        if image not in first:
            first[image] = word
            continue
        u = first[image]
        f_u, f_w = f.coefficient(u), f.coefficient(word)
        if f_u != f_w:
            logger.info(f"Commutativity violated: {format_word(u)} vs {format_word(word)}")
            return CommutativityViolation(u, word, f_u, f_w)
    return None
