"""
CDA differential systems: solvability and Taylor coefficients

A CDA system ∂_{x_j} f = p^(j)(f), f(0) = c has a power series solution iff its
companion shuffle automaton recognises commutative series in every
nonterminal. The coefficient of a word with Parikh image n is then the
coefficient of x^n / n! in the solution (divided-power convention).
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from commseries.algebra.polynomials import lift, make_ring
from commseries.apps.systems import CDASystem, Unknown, check_components, value_at
from commseries.automata.mixed import MixedAutomaton
from commseries.decide.verdict import Verdict
from commseries.errors import CommSeriesError
from commseries.groebner.orders import MonomialOrder

# Set up logging
logger = logging.getLogger(__name__)


def companion_shuffle(system: CDASystem) -> MixedAutomaton:
    """The companion shuffle automaton: Δ_{a_j} X_i = p_i^(j), F(X_i) = c_i."""
    return system.companion()


def cda_solvable(
    system: CDASystem,
    order: Optional[MonomialOrder] = None,
    concurrent: bool = False,
    max_concurrent: int = 4,
) -> Verdict:
    """
    Decide whether the system has a power series solution for its initial value.

    Returns:
        A verdict; a negative one names two orders of differentiation that
        give different Taylor coefficients
    """
    logger.info(f"Checking solvability of a CDA system with {system.k} unknowns in {system.dims} variables")
    return check_components(system, order, concurrent, max_concurrent)


def taylor_coefficient(
    system: CDASystem,
    point: Sequence[int],
    unknown: Unknown = 0,
    ordinary: bool = False,
    allow_inconsistent: bool = False,
    verdict: Optional[Verdict] = None,
) -> Fraction:
    """
    A Taylor coefficient of the solution.

    Args:
        system: The CDA system
        point: The multi-index n
        unknown: Name or 0-based index of f_i
        ordinary: Return the coefficient of x^n instead of x^n / n!
        allow_inconsistent: Skip the solvability check
        verdict: A solvability verdict computed earlier for this system

    Returns:
        ∂^n f_i(0) by default, ∂^n f_i(0) / n_1! ... n_d! when ordinary is set

    Raises:
        InconsistentSystemError: If the system is unsolvable and the override is not set
    """
    value = value_at(system, point, unknown, allow_inconsistent, verdict)
    if ordinary:
        for n in point:
            value /= factorial(n)
    return value


def adjoin_variable(system: CDASystem, name: str, coordinate: int) -> CDASystem:
    """
    Adjoin the independent variable x_j as a fresh unknown.

    The new unknown t satisfies ∂_{x_j} t = 1, ∂_{x_h} t = 0 for h != j and
    t(0) = 0, so t = x_j; equations may then use x_j. This turns a
    non-autonomous system into an autonomous one.

    Args:
        system: The system, whose equations do not mention name yet
        name: Name of the new unknown
        coordinate: The variable x_j, from 1

    Returns:
        The system with one more unknown, placed last

    Raises:
        CommSeriesError: If the name is taken or the coordinate is out of range
    """
    system.check_coordinate(coordinate)
    if name in system.unknowns:
        raise CommSeriesError(f"Unknown {name!r} is already declared")
    ring = make_ring(system.unknowns + [name])
    equations = tuple(
        tuple(lift(p, ring) for p in row) + ((ring.one if j == coordinate else ring.zero),)
        for j, row in enumerate(system.equations, start=1)
    )
    return CDASystem(ring, system.dims, equations, system.init + (Fraction(0),))
