"""
Multivariate polyrec sequences: consistency, evaluation, sections and diagonals

A polyrec system σ_j f = p^(j)(f), f(0) = c defines a sequence N^d -> Q^k iff
its companion Hadamard automaton recognises commutative series in every
nonterminal; the value at n is then the coefficient of any word with Parikh
image n.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Union

from commseries.algebra.polynomials import substitute
from commseries.automata.mixed import MixedAutomaton
from commseries.automata.semantics import coefficient
from commseries.apps.systems import (
    PolyrecConstant,
    PolyrecSystem,
    Unknown,
    check_components,
    letter,
    value_at,
)
from commseries.decide.verdict import Verdict
from commseries.errors import CommSeriesError, InconsistentSystemError
from commseries.groebner.orders import MonomialOrder

# Set up logging
logger = logging.getLogger(__name__)


def companion_hadamard(system: PolyrecSystem) -> MixedAutomaton:
    """The companion Hadamard automaton: Δ_{a_j} X_i = p_i^(j), F(X_i) = c_i."""
    return system.companion()


def polyrec_consistent(
    system: PolyrecSystem,
    order: Optional[MonomialOrder] = None,
    concurrent: bool = False,
    max_concurrent: int = 4,
) -> Verdict:
    """
    Decide whether the system has a solution for its initial value.

    Args:
        system: The polyrec system
        order: Monomial order of the Gröbner bases
        concurrent: Check the unknowns in a thread pool
        max_concurrent: Number of workers when concurrent is set

    Returns:
        A verdict; a negative one names two lattice paths to the same point
        along which an unknown takes different values
    """
    logger.info(f"Checking consistency of a polyrec system with {system.k} unknowns in {system.dims} dimensions")
    return check_components(system, order, concurrent, max_concurrent)


def evaluate_point(
    system: PolyrecSystem,
    point: Sequence[int],
    unknown: Unknown = 0,
    allow_inconsistent: bool = False,
    verdict: Optional[Verdict] = None,
) -> Fraction:
    """
    The value f_i(n_1, ..., n_d) of a consistent system.

    Args:
        system: The polyrec system
        point: The point n
        unknown: Name or 0-based index of f_i
        allow_inconsistent: Return the value along the canonical path
            a1^n1 ... ad^nd without checking consistency
        verdict: A consistency verdict computed earlier for this system

    Raises:
        InconsistentSystemError: If the system is inconsistent and the override is not set
    """
    return value_at(system, point, unknown, allow_inconsistent, verdict)


def section(
    system: PolyrecSystem,
    coordinate: int,
    value: int,
    allow_inconsistent: bool = False,
) -> Union[PolyrecSystem, PolyrecConstant]:
    """
    Fix coordinate j to the value m.

    The equations of σ_j are dropped and the new initial value is f(m·e_j).
    Coordinates after j move down by one.

    Args:
        system: A consistent polyrec system
        coordinate: The coordinate j, from 1
        value: The value m >= 0
        allow_inconsistent: Skip the consistency check

    Returns:
        The section, or a PolyrecConstant when the system is univariate

    Raises:
        InconsistentSystemError: If the system is inconsistent and the override is not set
    """
    system.check_coordinate(coordinate)
    if value < 0:
        raise CommSeriesError(f"Section value must be nonnegative, got {value}")
    if not allow_inconsistent:
        verdict = polyrec_consistent(system)
        if not verdict.answer:
            raise InconsistentSystemError(f"Cannot take a section of an inconsistent system: {verdict.path}")

    automaton = system.companion()
    word = (letter(coordinate),) * value
    values = tuple(coefficient(automaton, x, word) for x in automaton.gens)
    logger.info(f"Section at coordinate {coordinate} = {value} has initial value {values}")
    if system.dims == 1:
        return PolyrecConstant(tuple(system.unknowns), values)
    equations = tuple(row for j, row in enumerate(system.equations, start=1) if j != coordinate)
    return PolyrecSystem(system.ring, system.dims - 1, equations, values)


def diagonal(system: PolyrecSystem, first: int, second: int) -> PolyrecSystem:
    """
    Identify coordinates j < h: g(n) is f with n_h := n_j.

    The merged coordinate keeps index j and shifts both coordinates at once,
    σ_j g_i = p_i^(h)(p_1^(j), ..., p_k^(j)); coordinate h disappears and the
    initial value is unchanged. The result describes the diagonal of f when
    the system is consistent.

    Raises:
        CommSeriesError: If j = h or a coordinate is out of range
    """
    system.check_coordinate(first)
    system.check_coordinate(second)
    if first == second:
        raise CommSeriesError(f"A diagonal needs two different coordinates, got {first} twice")
    j, h = sorted((first, second))
    inner = system.equations[j - 1]
    merged = tuple(substitute(p, inner) for p in system.equations[h - 1])
    equations = []
    for index, row in enumerate(system.equations, start=1):
        if index == j:
            equations.append(merged)
        elif index != h:
            equations.append(row)
    logger.info(f"Diagonal of coordinates {j} and {h}")
    return PolyrecSystem(system.ring, system.dims - 1, tuple(equations), system.init)
