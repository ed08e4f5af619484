"""
Verdicts of the decision procedures
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from commseries.errors import CommSeriesError
from commseries.utils import Word, format_rational, format_word


@dataclass(frozen=True)
class Witness:
    """
    Words certifying a negative answer.

    A zeroness witness is one word with a nonzero coefficient. Equality and
    commutativity witnesses are pairs (for commutativity, Parikh-equivalent
    words) whose coefficients differ.
    """

    word: Word
    value: Fraction
    other_word: Optional[Word] = None
    other_value: Optional[Fraction] = None

    @property
    def is_pair(self) -> bool:
        return self.other_word is not None

    def __str__(self) -> str:
        first = f"{format_word(self.word)} ↦ {format_rational(self.value)}"
        if not self.is_pair:
            return first
        return f"{first}, {format_word(self.other_word)} ↦ {format_rational(self.other_value)}"


@dataclass(frozen=True)
class FailedCheck:
    """
    The query that produced a negative answer.

    Attributes:
        kind: "zeroness", "equality", "swap" or "rotate"
        letters: (a, b) for a swap, (a,) for a rotate, () otherwise
    """

    kind: str
    letters: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.letters:
            return self.kind
        return f"{self.kind} {' '.join(self.letters)}"


@dataclass(frozen=True)
class PathWitness:
    """
    Two monotone lattice paths to the same point on which an unknown disagrees.

    Attributes:
        unknown: Name of the unknown
        point: The lattice point (Parikh image of both paths)
        first: First path, as a word over a_1, ..., a_d
        second: Second path
        first_value: Value along the first path
        second_value: Value along the second path
    """

    unknown: str
    point: Tuple[int, ...]
    first: Word
    second: Word
    first_value: Fraction
    second_value: Fraction

    def __str__(self) -> str:
        return (
            f"{self.unknown}{self.point}: {format_word(self.first)} gives "
            f"{format_rational(self.first_value)}, {format_word(self.second)} gives "
            f"{format_rational(self.second_value)}"
        )


@dataclass(frozen=True)
class Verdict:
    """
    Answer of a decision procedure.

    A negative answer always carries a witness that can be re-checked with
    ``coefficient``.

    Attributes:
        answer: Whether the property holds
        witness: Certificate of a negative answer
        stabilization_index: Level N at which the ideal chain(s) stabilised
        failed_check: The failing query, for negative answers
        path: Lattice-path form of the witness, for polyrec and CDA systems
    """

    answer: bool
    witness: Optional[Witness] = None
    stabilization_index: int = 0
    failed_check: Optional[FailedCheck] = None
    path: Optional[PathWitness] = None

    def __post_init__(self) -> None:
        if not self.answer and self.witness is None:
            raise CommSeriesError("A negative verdict needs a witness")

    def __bool__(self) -> bool:
        return self.answer

