"""
Reduced Gröbner bases with Buchberger's algorithm
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from commseries.errors import ArityError
from commseries.groebner.orders import MonomialOrder

# Set up logging
logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    """
    A reduced, monic Gröbner basis.

    The zero ideal has the empty basis and the unit ideal has exactly {1}.

    Attributes:
        order: The monomial order
        ring: The polynomial ring, ordered by ``order``
        basis: The basis polynomials, sorted by increasing leading monomial
    """

    order: MonomialOrder
    ring: PolyRing
    basis: Tuple[PolyElement, ...]

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.ring.one


def spoly(f: PolyElement, g: PolyElement) -> PolyElement:
    """Return the s-polynomial of monic polynomials f and g."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    s1 = f.mul_monom(R.monomial_div(lcm, f.LM))
    s2 = g.mul_monom(R.monomial_div(lcm, g.LM))
    return s1 - s2


def _select(G: Sequence[PolyElement], P: Set[Pair]) -> Pair:
    """Normal strategy: smallest lcm of leading monomials, ties broken by index."""
    R = G[0].ring

    def key(p: Pair):
        lcm = R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        return R.order(lcm), p[1], p[0]

    return min(P, key=key)


def _update(
    G: List[PolyElement], P: Set[Pair], f: PolyElement
) -> Tuple[List[PolyElement], Set[Pair]]:
    """Add f to the basis, pairing it with every element whose leading monomial is not coprime."""
    R = f.ring
    lmf = f.LM
    new_pairs = {
        (i, len(G))
        for i in range(len(G))
        if R.monomial_lcm(G[i].LM, lmf) != R.monomial_mul(G[i].LM, lmf)
    }
    return G + [f], P | new_pairs


def _minimalize(G: Sequence[PolyElement]) -> List[PolyElement]:
    """Drop elements whose leading monomial is divisible by another's."""
    if not G:
        return []
    R = G[0].ring
    Gmin: List[PolyElement] = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: Sequence[PolyElement]) -> List[PolyElement]:
    """Fully reduce the tails of a minimal basis."""
    Gred = []
    for i in range(len(G)):
        others = list(G[:i]) + list(G[i + 1 :])
        g = G[i].rem(others) if others else G[i]
        Gred.append(g.monic())
    return Gred


def buchberger(
    gens: Sequence[PolyElement],
    order: Optional[MonomialOrder] = None,
    base: Optional[PolyRing] = None,
) -> GroebnerBasis:
    """
    Compute the reduced Gröbner basis of the ideal generated by gens.

    Args:
        gens: Generators, all over the same variables
        order: Monomial order; defaults to grevlex
        base: Ring to use when gens is empty

    Returns:
        The reduced, monic Gröbner basis

    Raises:
        ArityError: If the generators live in different rings
    """
    if base is None:
        if not gens:
            raise ArityError("An empty generator list needs an explicit ring")
        base = gens[0].ring
    if order is None:
        order = MonomialOrder.of(base)
    R = order.ring(base)

    F = [order.convert(f, R) for f in gens]
    F = [f for f in F if f]

    G: List[PolyElement] = []
    P: Set[Pair] = set()
    for f in F:
        f = f.rem(G).monic() if G else f.monic()
        if f:
            G, P = _update(G, P, f)

    while P:
        i, j = _select(G, P)
        P.remove((i, j))
        r = spoly(G[i], G[j]).rem(G)
        if r:
            G, P = _update(G, P, r.monic())
            if r.LM == R.zero_monom:
                logger.debug("Unit ideal reached")
                break

    if any(g.LM == R.zero_monom for g in G):
        basis: Tuple[PolyElement, ...] = (R.one,)
    else:
        reduced = _interreduce(_minimalize(G))
        basis = tuple(sorted(reduced, key=lambda h: R.order(h.LM)))
    logger.debug(f"Gröbner basis of {len(F)} generators has {len(basis)} elements")
    return GroebnerBasis(order=order, ring=R, basis=basis)
