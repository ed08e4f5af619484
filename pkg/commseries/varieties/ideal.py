"""
Commutativity polynomials and their ideals

For an automaton without a fixed output function, the output vectors F that
make ⟦α⟧ commutative are the common zeros of the polynomials Δ_u α - Δ_v α
over Parikh-equivalent words u ~ v. P_n collects these polynomials for
|u| = |v| <= n, taking differences against the canonical representative of
each Parikh class (its letters sorted by alphabet position).
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from sympy.polys.rings import PolyElement

from commseries.automata.mixed import MixedAutomaton
from commseries.errors import UsageError
from commseries.groebner.buchberger import GroebnerBasis, buchberger
from commseries.groebner.ideals import normal_form
from commseries.groebner.orders import MonomialOrder
from commseries.utils import Word

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutativityIdeal:
    """
    The ideal generated by the commutativity polynomials of depth n.

    Attributes:
        automaton: The automaton (its output function is ignored)
        configuration: The configuration α
        depth: The word length bound n
        polys: The distinct nonzero differences Δ_u α - Δ_v α
        gb: Reduced Gröbner basis of the ideal they generate
    """

    automaton: MixedAutomaton
    configuration: PolyElement
    depth: int
    polys: Tuple[PolyElement, ...]
    gb: GroebnerBasis

    @property
    def is_zero(self) -> bool:
        return self.gb.is_zero

    def same_ideal(self, other: "CommutativityIdeal") -> bool:
        """Equality of ideals for two depths of the same ascending chain."""
        return self.gb.basis == other.gb.basis


def canonical_representative(word: Word, alphabet: Tuple[str, ...]) -> Word:
    """The word with the same letters, sorted by alphabet position."""
    position = {symbol: i for i, symbol in enumerate(alphabet)}
    return tuple(sorted(word, key=position.__getitem__))


def iter_commutativity_ideals(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    order: Optional[MonomialOrder] = None,
) -> Iterator[CommutativityIdeal]:
    """
    Yield the ideals of P_0, P_1, P_2, ... one depth at a time.

    Each depth extends the configurations of the previous one by one letter and
    only adds the differences of the new words, so the chain is ascending.
    """
    alpha = automaton.configuration(alpha)
    symbols = automaton.symbols
    configs: Dict[Word, PolyElement] = {(): alpha}
    level: List[Word] = [()]
    polys: List[PolyElement] = []
    seen = set()
    gb = buchberger([], order, base=automaton.ring)
    depth = 0
    while True:
        new: List[PolyElement] = []
        for word in level:
            rep = canonical_representative(word, symbols)
            if rep == word:
                continue
            difference = configs[word] - configs[rep]
            if difference and difference not in seen:
                seen.add(difference)
                new.append(difference)
        if new:
            polys.extend(new)
            fresh = [p for p in new if normal_form(p, gb)]
            if fresh:
                gb = buchberger(list(gb.basis) + fresh, gb.order, base=automaton.ring)
        logger.info(f"Commutativity polynomials of depth {depth}: {len(polys)} generators, basis of {len(gb)}")
        yield CommutativityIdeal(automaton, alpha, depth, tuple(polys), gb)

        depth += 1
        next_level: List[Word] = []
        for word in level:
            for symbol in symbols:
                child = word + (symbol,)
                configs[child] = automaton.action(symbol)(configs[word])
                next_level.append(child)
        level = next_level


def commutativity_polynomials(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    depth: int,
    order: Optional[MonomialOrder] = None,
) -> CommutativityIdeal:
    """
    Compute P_depth and the ideal it generates.

    Args:
        automaton: The automaton; its output function plays no role
        alpha: The configuration
        depth: The word length bound n >= 0
        order: Monomial order of the Gröbner basis

    Returns:
        The commutativity ideal of depth n
    """
    if depth < 0:
        raise UsageError(f"Depth must be nonnegative, got {depth}")
    for ideal in iter_commutativity_ideals(automaton, alpha, order):
        if ideal.depth == depth:
            return ideal
