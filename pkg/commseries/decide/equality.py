"""
Equality of recognised series, by zeroness of their difference
"""

import logging
from typing import Optional

from sympy.polys.rings import PolyElement

from commseries.automata.closure import disjoint_union
from commseries.automata.mixed import MixedAutomaton
from commseries.automata.semantics import coefficient
from commseries.decide.verdict import FailedCheck, Verdict, Witness
from commseries.decide.zeroness import zeroness
from commseries.groebner.orders import MonomialOrder

# Set up logging
logger = logging.getLogger(__name__)


def equality(
    first: MixedAutomaton,
    alpha: PolyElement,
    second: MixedAutomaton,
    beta: PolyElement,
    order: Optional[MonomialOrder] = None,
) -> Verdict:
    """
    Decide whether ⟦alpha⟧ over first equals ⟦beta⟧ over second.

    Args:
        first: Automaton A
        alpha: Configuration of A
        second: Automaton B over the same letters and modes
        beta: Configuration of B
        order: Kind of monomial order; it is applied to the union of the nonterminals

    Returns:
        A verdict; a negative one carries a word w with both coefficients

    Raises:
        AlphabetError: If the alphabets or modes differ
    """
    union = disjoint_union(first, second)
    difference = union.left(alpha) - union.right(beta)
    if order is not None:
        order = MonomialOrder.of(union.automaton.ring, order.kind)
    verdict = zeroness(union.automaton, difference, order)
    if verdict.answer:
        return verdict
    word = verdict.witness.word
    witness = Witness(word, coefficient(first, alpha, word), word, coefficient(second, beta, word))
    logger.info(f"Series differ: {witness}")
    return Verdict(
        False,
        witness=witness,
        stabilization_index=verdict.stabilization_index,
        failed_check=FailedCheck("equality"),
    )
