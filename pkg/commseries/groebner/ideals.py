"""
Ideal queries: normal forms, membership, equality and the unit test
"""

from typing import Iterable

from sympy.polys.rings import PolyElement

from commseries.groebner.buchberger import GroebnerBasis


def normal_form(p: PolyElement, gb: GroebnerBasis) -> PolyElement:
    """
    Reduce p modulo a Gröbner basis.

    Args:
        p: Polynomial over the same variables as gb
        gb: The Gröbner basis

    Returns:
        The remainder, zero iff p is in the ideal

    Raises:
        ArityError: If p is over other variables
    """
    p = gb.order.convert(p, gb.ring)
    if not gb.basis:
        return p
    return p.rem(list(gb.basis))


def ideal_membership(p: PolyElement, gb: GroebnerBasis) -> bool:
    return not normal_form(p, gb)


def contains_all(gb: GroebnerBasis, polys: Iterable[PolyElement]) -> bool:
    """True iff every polynomial lies in the ideal of gb."""
    return all(ideal_membership(p, gb) for p in polys)


def ideal_equality(first: GroebnerBasis, second: GroebnerBasis) -> bool:
    """True iff both bases generate the same ideal (mutual membership of generators)."""
    return contains_all(first, second.basis) and contains_all(second, first.basis)


def contains_one(gb: GroebnerBasis) -> bool:
    """True iff the ideal is the whole ring, i.e. has no common complex zero."""
    return gb.is_unit
