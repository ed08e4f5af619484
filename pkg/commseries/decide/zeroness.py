"""
Zeroness by ascending chains of polynomial ideals

Phase 1 grows J_0 = ⟨α⟩, J_{n+1} = J_n + ⟨Δ_a g : g in basis(J_n), a in Σ⟩
until every Δ_a g reduces to 0 modulo J_N. Since each Δ_a is an endomorphism,
a derivation or a sigma-derivation, Δ_a(βg) lies in ⟨g, Δ_a g⟩ for every β:
Δ_a β·Δ_a g, Δ_a β·g + β·Δ_a g and Δ_a β·g + S_a β·Δ_a g respectively. So J_n
equals ⟨Δ_w α : |w| <= n⟩ whatever generators are used, and once the chain
stops growing it is closed under every Δ_a. Hilbert's basis theorem makes it
stop.

Phase 2: every Δ_w α is then a Q[X]-combination of the Δ_u α with |u| <= N, and
the output function is a ring homomorphism, so ⟦α⟧ = 0 iff all coefficients
of words of length at most N vanish.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import evaluate
from commseries.automata.mixed import MixedAutomaton
from commseries.automata.semantics import iter_configurations
from commseries.decide.verdict import FailedCheck, Verdict, Witness
from commseries.groebner.buchberger import GroebnerBasis, buchberger
from commseries.groebner.ideals import normal_form
from commseries.groebner.orders import MonomialOrder
from commseries.utils import format_word

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainState:
    """
    A level of the ideal chain.

    Attributes:
        automaton: The automaton whose transitions drive the chain
        basis: Reduced Gröbner basis of J_level
        level: The index n
        frontier: Generators added when moving to this level
    """

    automaton: MixedAutomaton
    basis: GroebnerBasis
    level: int
    frontier: Tuple[PolyElement, ...]


def ideal_chain(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    order: Optional[MonomialOrder] = None,
) -> ChainState:
    """
    Run phase 1: grow the ideal chain of alpha until it stabilises.

    Args:
        automaton: The automaton
        alpha: The configuration
        order: Monomial order of the Gröbner bases; defaults to grevlex

    Returns:
        The stable level N and the basis of J_N
    """
    alpha = automaton.configuration(alpha)
    gb = buchberger([alpha], order, base=automaton.ring)
    state = ChainState(automaton, gb, 0, (alpha,) if alpha else ())
    while True:
        frontier: List[PolyElement] = []
        for g in state.basis.basis:
            for symbol in automaton.symbols:
                r = normal_form(automaton.action(symbol)(g), state.basis)
                if r:
                    frontier.append(r)
        if not frontier:
            logger.info(
                f"Ideal chain stable at level {state.level} with {len(state.basis)} basis elements"
            )
            return state
        gb = buchberger(list(state.basis.basis) + frontier, state.basis.order)
        state = ChainState(automaton, gb, state.level + 1, tuple(frontier))
        logger.info(f"Ideal chain level {state.level}: {len(gb)} basis elements")


def zeroness(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    order: Optional[MonomialOrder] = None,
) -> Verdict:
    """
    Decide whether ⟦alpha⟧ is the zero series.

    Args:
        automaton: The automaton
        alpha: A configuration over its nonterminals
        order: Monomial order of the Gröbner bases; defaults to grevlex

    Returns:
        A verdict; a negative one carries the shortlex-first word with a
        nonzero coefficient
    """
    state = ideal_chain(automaton, alpha, order)
    if state.basis.is_zero:
        return Verdict(True, stabilization_index=state.level)
    for word, config in iter_configurations(automaton, alpha, state.level):
        value = evaluate(config, automaton.output)
        if value:
            logger.info(f"Nonzero coefficient {value} at {format_word(word)}")
            return Verdict(
                False,
                witness=Witness(word, value),
                stabilization_index=state.level,
                failed_check=FailedCheck("zeroness"),
            )
    return Verdict(True, stabilization_index=state.level)
