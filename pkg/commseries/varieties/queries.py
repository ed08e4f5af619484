"""
Parametric commutativity: which output functions make a series commutative?

The chain of ideals ⟨P_n⟩ ascends and eventually stabilises. In practice it
is walked up to a depth budget and declared stable at the least n with
⟨P_n⟩ = ⟨P_{n+1}⟩ = ⟨P_{n+2}⟩. Answers that do not depend on stabilisation
(1 entered the ideal, a generator does not vanish) are given as soon as they
are known; everything else is "unknown" when the budget runs out.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Callable, List, Optional, Sequence, Tuple

from sympy import Poly, Symbol, roots
from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import constant, evaluate, substitute, variable_names
from commseries.automata.mixed import MixedAutomaton
from commseries.errors import DepthBudgetExceeded, UsageError
from commseries.groebner.buchberger import buchberger
from commseries.groebner.orders import MonomialOrder
from commseries.utils import RationalLike, to_fraction
from commseries.varieties.ideal import CommutativityIdeal, iter_commutativity_ideals

# Set up logging
logger = logging.getLogger(__name__)


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Stabilization:
    """
    Outcome of walking the commutativity chain.

    Attributes:
        index: The stabilisation index N, or None if the budget ran out
        ideal: ⟨P_N⟩, or the deepest ideal computed
        trace: Basis sizes at depths 0, 1, 2, ...
    """

    index: Optional[int]
    ideal: CommutativityIdeal
    trace: Tuple[int, ...]

    @property
    def stabilized(self) -> bool:
        return self.index is not None


def _walk(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_depth: int,
    order: Optional[MonomialOrder] = None,
    stop: Optional[Callable[[CommutativityIdeal], bool]] = None,
) -> Tuple[Stabilization, Optional[CommutativityIdeal]]:
    """
    Walk the chain up to depth max_depth + 2.

    Returns:
        The stabilisation outcome, and the first ideal on which stop returned
        True (the walk ends there)
    """
    if max_depth < 0:
        raise UsageError(f"Depth budget must be nonnegative, got {max_depth}")
    window: List[CommutativityIdeal] = []
    trace: List[int] = []
    for ideal in iter_commutativity_ideals(automaton, alpha, order):
        trace.append(len(ideal.gb))
        if stop is not None and stop(ideal):
            return Stabilization(None, ideal, tuple(trace)), ideal
        window = (window + [ideal])[-3:]
        if len(window) == 3 and window[0].same_ideal(window[1]) and window[1].same_ideal(window[2]):
            n = window[0].depth
            logger.info(f"Commutativity ideal stable at depth {n} with {len(window[0].gb)} basis elements")
            return Stabilization(n, window[0], tuple(trace)), None
        if ideal.depth >= max_depth + 2:
            logger.warning(f"Commutativity ideal not stable within depth {max_depth}")
            return Stabilization(None, ideal, tuple(trace)), None


def stabilize(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_depth: int,
    order: Optional[MonomialOrder] = None,
) -> Stabilization:
    """
    Find the least n <= max_depth with ⟨P_n⟩ = ⟨P_{n+1}⟩ = ⟨P_{n+2}⟩.

    Args:
        automaton: The automaton; its output function plays no role
        alpha: The configuration
        max_depth: The depth budget
        order: Monomial order of the Gröbner bases

    Returns:
        The stabilisation index and ideal, or index None with the chain trace
    """
    result, _ = _walk(automaton, alpha, max_depth, order)
    return result


def exists_commutative_output(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_depth: int,
    order: Optional[MonomialOrder] = None,
) -> Answer:
    """
    Is there a complex output vector making ⟦alpha⟧ commutative?

    By the weak Nullstellensatz this holds iff 1 is not in the stable ideal.
    """
    result, stopped = _walk(automaton, alpha, max_depth, order, stop=lambda ideal: ideal.gb.is_unit)
    if stopped is not None:
        return Answer.NO
    if not result.stabilized:
        return Answer.UNKNOWN
    return Answer.YES


def all_outputs_commutative(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_depth: int,
    order: Optional[MonomialOrder] = None,
) -> Answer:
    """Is ⟦alpha⟧ commutative for every output vector, i.e. is the stable ideal zero?"""
    result, stopped = _walk(automaton, alpha, max_depth, order, stop=lambda ideal: not ideal.is_zero)
    if stopped is not None:
        return Answer.NO
    if not result.stabilized:
        return Answer.UNKNOWN
    return Answer.YES


def output_membership(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    output: Sequence[RationalLike],
    max_depth: int,
    order: Optional[MonomialOrder] = None,
) -> bool:
    """
    Does the output vector F make ⟦alpha⟧ commutative?

    Args:
        automaton: The automaton
        alpha: The configuration
        output: One rational per nonterminal
        max_depth: The depth budget

    Returns:
        True iff every stable commutativity polynomial vanishes at F

    Raises:
        DepthBudgetExceeded: If the chain did not stabilise and every
            generator computed so far vanishes at F
    """
    point = [to_fraction(c) for c in output]

    def violated(ideal: CommutativityIdeal) -> bool:
        return any(evaluate(p, point) for p in ideal.polys)

    result, stopped = _walk(automaton, alpha, max_depth, order, stop=violated)
    if stopped is not None:
        return False
    if not result.stabilized:
        raise DepthBudgetExceeded(
            f"Commutativity ideal did not stabilise within depth {max_depth}; "
            f"basis sizes {list(result.trace)}"
        )
    return True


def _rational_roots(p: PolyElement, i: int) -> List[Fraction]:
    symbol = Symbol(variable_names(p.ring)[i])
    univariate = Poly(p.as_expr(), symbol)
    found = roots(univariate, filter="Q")
    return sorted(to_fraction(str(root)) for root in found)


def _solve(gens: Sequence[PolyElement], i: int, values: List[Fraction]) -> Optional[List[Fraction]]:
    """Back-substitute into a lex basis, choosing x_i after x_{i+1}, ..., x_k are fixed."""
    if i < 0:
        return values
    ring = gens[0].ring
    k = len(values)
    images = [ring.gens[j] if j <= i else constant(ring, values[j]) for j in range(k)]
    univariate = []
    for g in gens:
        # only basis elements in x_i, ..., x_k constrain x_i at this point
        if any(exponent for exponent in g.LM[:i]):
            continue
        h = substitute(g, images)
        if h.is_ground:
            if h:
                return None
            continue
        univariate.append(h)
    if univariate:
        common = reduce(lambda p, q: p.gcd(q), univariate)
        if common.is_ground:
            return None
        candidates = _rational_roots(common, i)
    else:
        candidates = [Fraction(0), Fraction(1), Fraction(-1)]
    for candidate in candidates:
        attempt = list(values)
        attempt[i] = candidate
        solution = _solve(gens, i - 1, attempt)
        if solution is not None:
            return solution
    return None


def sample_commutative_output(
    automaton: MixedAutomaton,
    alpha: PolyElement,
    max_depth: int,
) -> Optional[Tuple[Fraction, ...]]:
    """
    Look for a rational output vector making ⟦alpha⟧ commutative.

    Solves the stable ideal by back-substitution over a lex Gröbner basis,
    taking rational roots of univariate polynomials and trying 0, 1 and -1 for
    unconstrained variables.

    Returns:
        A rational point of the commutativity variety, or None if none was found

    Raises:
        DepthBudgetExceeded: If the chain did not stabilise within the budget
    """
    result = stabilize(automaton, alpha, max_depth)
    if not result.stabilized:
        raise DepthBudgetExceeded(f"Commutativity ideal did not stabilise within depth {max_depth}")
    ideal = result.ideal
    if ideal.gb.is_unit:
        return None
    k = automaton.k
    if ideal.is_zero:
        return tuple(Fraction(0) for _ in range(k))
    lex = buchberger(list(ideal.gb.basis), MonomialOrder.of(automaton.ring, "lex"))
    solution = _solve(list(lex.basis), k - 1, [Fraction(0)] * k)
    if solution is None:
        logger.info("No rational point found on the commutativity variety")
        return None
    return tuple(solution)
