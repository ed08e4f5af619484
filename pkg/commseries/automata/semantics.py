"""
Semantics of mixed automata: steps, runs, coefficients and truncations

A word acts on a configuration letter by letter, the first letter first:
run(α, a_1 ... a_n) = Δ_{a_n}(... Δ_{a_1} α), and the coefficient of w in the
series recognised by α is the output function evaluated at run(α, w).
Consequently the left derivative of ⟦α⟧ by a is ⟦Δ_a α⟧.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import evaluate
from commseries.automata.mixed import MixedAutomaton
from commseries.errors import WindowError
from commseries.oracle.series import TruncatedSeries
from commseries.utils import Word

# Set up logging
logger = logging.getLogger(__name__)


def step(automaton: MixedAutomaton, alpha: PolyElement, symbol: str) -> PolyElement:
    """
    Apply the transitions of one letter to a configuration.

    The generator images delta(symbol, ·) are extended to all of Q[X] as an
    endomorphism, a derivation or a sigma-derivation, following the mode of
    the letter.

    Args:
        automaton: The automaton
        alpha: A configuration over its nonterminals
        symbol: The letter

    Returns:
        Δ_symbol α

    Raises:
        UnknownSymbolError: If the letter is not in the alphabet
    """
    return automaton.action(symbol)(automaton.configuration(alpha))


def run(automaton: MixedAutomaton, alpha: PolyElement, word: Sequence[str]) -> PolyElement:
    """Apply a word to a configuration, first letter first."""
    config = automaton.configuration(alpha)
    for symbol in word:
        config = automaton.action(symbol)(config)
    return config


def coefficient(automaton: MixedAutomaton, alpha: PolyElement, word: Sequence[str]) -> Fraction:
    """The coefficient of word in ⟦alpha⟧."""
    return evaluate(run(automaton, alpha, word), automaton.output)


def iter_configurations(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_len: int,
    prune_zero: bool = True,
) -> Iterator[Tuple[Word, PolyElement]]:
    """
    Walk the configuration trie breadth first.

    Words come in shortlex order. Steps are memoised on (letter, configuration),
    so configurations shared by several words are only advanced once. With
    prune_zero set, the subtree below a zero configuration is skipped, since
    every word in it has coefficient 0.

    Args:
        automaton: The automaton
        alpha: The initial configuration
        max_len: Length bound
        prune_zero: Skip zero configurations and their extensions

    Returns:
        An iterator over (word, configuration) pairs
    """
    memo: Dict[Tuple[str, PolyElement], PolyElement] = {}
    level: List[Tuple[Word, PolyElement]] = [((), automaton.configuration(alpha))]
    for length in range(max_len + 1):
        next_level: List[Tuple[Word, PolyElement]] = []
        for word, config in level:
            if prune_zero and not config:
                continue
            yield word, config
            if length == max_len:
                continue
            for symbol in automaton.symbols:
                key = (symbol, config)
                if key not in memo:
                    memo[key] = automaton.action(symbol)(config)
                next_level.append((word + (symbol,), memo[key]))
        level = next_level
        logger.debug(f"Configuration trie level {length}: {len(level)} words, {len(memo)} cached steps")


def truncate(automaton: MixedAutomaton, alpha: PolyElement, max_len: int) -> TruncatedSeries:
    """
    Compute the coefficients of ⟦alpha⟧ on all words of length at most max_len.

    Args:
        automaton: The automaton
        alpha: The configuration
        max_len: The window L

    Returns:
        The truncation of ⟦alpha⟧ to the window
    """
    if max_len < 0:
        raise WindowError(f"Window must be nonnegative, got {max_len}")
    coeffs = {
        word: evaluate(config, automaton.output)
        for word, config in iter_configurations(automaton, alpha, max_len)
    }
    return TruncatedSeries(automaton.symbols, max_len, coeffs)
