"""
Polynomial automata and their correspondence with Hadamard automata

A polynomial automaton moves a rational state vector forwards: q·a = Δ^a(q),
and outputs F(q·w). A Hadamard automaton moves a configuration and evaluates
at the end. Swapping the roles of initial state and output gives the same
series up to reversal of the words.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import evaluate
from commseries.automata.mixed import MixedAutomaton, Presentation
from commseries.errors import AlphabetError, ArityError, UnknownSymbolError
from commseries.oracle.series import TruncatedSeries
from commseries.product_rules import ProductMode
from commseries.utils import to_fraction, words_up_to

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolynomialAutomaton:
    """
    A polynomial automaton of dimension k.

    Attributes:
        ring: Ring of the state coordinates q_1, ..., q_k
        alphabet: Input letters
        initial: Initial state q_I
        updates: For every letter, the polynomial map Δ^a as k polynomials
        output: Output polynomial F
    """

    ring: PolyRing
    alphabet: Tuple[str, ...]
    initial: Tuple[Fraction, ...]
    updates: Mapping[str, Tuple[PolyElement, ...]]
    output: PolyElement

    def __post_init__(self) -> None:
        k = self.ring.ngens
        if len(self.initial) != k:
            raise ArityError(f"Initial state of length {len(self.initial)} for dimension {k}")
        if set(self.updates) != set(self.alphabet):
            raise AlphabetError(
                f"Updates given for {sorted(self.updates)} but the alphabet is {list(self.alphabet)}"
            )
        for symbol, images in self.updates.items():
            if len(images) != k or any(p.ring != self.ring for p in images):
                raise ArityError(f"Update of {symbol!r} is not a map on Q^{k}")
        if self.output.ring != self.ring:
            raise ArityError("The output polynomial must live over the state coordinates")
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initial", tuple(to_fraction(c) for c in self.initial))

    @property
    def dimension(self) -> int:
        return self.ring.ngens

    def state(self, word: Sequence[str]) -> Tuple[Fraction, ...]:
        """The state q_I·w reached after reading word."""
        q = self.initial
        for symbol in word:
            if symbol not in self.updates:
                raise UnknownSymbolError(f"Letter {symbol!r} is not in {list(self.alphabet)}")
            q = tuple(evaluate(p, q) for p in self.updates[symbol])
        return q

    def coefficient(self, word: Sequence[str]) -> Fraction:
        return evaluate(self.output, self.state(word))

    def truncate(self, max_len: int) -> TruncatedSeries:
        """The series F(q_I·w) on all words of length at most max_len."""
        states: Dict[Tuple[str, ...], Tuple[Fraction, ...]] = {(): self.initial}
        coeffs = {}
        for word in words_up_to(self.alphabet, max_len):
            if word:
                previous = states[word[:-1]]
                states[word] = tuple(evaluate(p, previous) for p in self.updates[word[-1]])
            coeffs[word] = evaluate(self.output, states[word])
        return TruncatedSeries(self.alphabet, max_len, coeffs)


def to_polynomial_automaton(
    automaton: MixedAutomaton, alpha: Optional[PolyElement] = None
) -> PolynomialAutomaton:
    """
    Convert a Hadamard automaton into a polynomial automaton for the reversed series.

    The initial state is the output vector, the updates are the transitions and
    the output polynomial is the configuration, so that
    P.coefficient(w) == coefficient(automaton, alpha, reversed(w)).

    Args:
        automaton: A pure-Hadamard automaton
        alpha: The configuration; defaults to the first nonterminal

    Raises:
        AlphabetError: If some letter is not a hadamard letter
    """
    if automaton.uniform_mode != ProductMode.HADAMARD:
        raise AlphabetError(
            f"Only Hadamard automata correspond to polynomial automata, got modes {automaton.modes}"
        )
    alpha = automaton.gens[0] if alpha is None else automaton.configuration(alpha)
    return PolynomialAutomaton(
        ring=automaton.ring,
        alphabet=automaton.symbols,
        initial=automaton.output,
        updates=dict(automaton.delta),
        output=alpha,
    )


def from_polynomial_automaton(polynomial: PolynomialAutomaton) -> Presentation:
    """
    Convert a polynomial automaton into a Hadamard automaton for the reversed series.

    Inverse to ``to_polynomial_automaton``: the outputs are the initial state,
    the transitions are the updates and the configuration is the output
    polynomial.
    """
    alphabet = tuple((symbol, ProductMode.HADAMARD) for symbol in polynomial.alphabet)
    automaton = MixedAutomaton(
        polynomial.ring, alphabet, dict(polynomial.updates), polynomial.initial
    )
    logger.debug(f"Hadamard automaton from a polynomial automaton of dimension {polynomial.dimension}")
    return Presentation(automaton, polynomial.output)
