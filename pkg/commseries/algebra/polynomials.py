"""
Exact multivariate polynomials over Q

Polynomials are sympy ``PolyElement`` values: sparse maps from exponent tuples to
rational coefficients, with no zero coefficients stored. A ring fixes the
variable names (the nonterminals of an automaton or the unknowns of a system),
their order (variable id = position) and the monomial order used for printing
and Gröbner computations.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from commseries.errors import ArityError, CommSeriesError
from commseries.utils import RationalLike, format_rational, to_fraction

# Set up logging
logger = logging.getLogger(__name__)

Polynomial = PolyElement

_ORDERS = {"grevlex": grevlex, "lex": lex}
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def make_ring(names: Sequence[str], order: str = "grevlex") -> PolyRing:
    """
    Build the polynomial ring Q[names] with the given monomial order.

    Args:
        names: Variable names; variable i is names[i]
        order: "grevlex" or "lex"

    Returns:
        The sympy PolyRing (rings are cached by sympy, equal arguments give equal rings)
    """
    if not names:
        raise ArityError("A polynomial ring needs at least one variable")
    if len(set(names)) != len(names):
        raise ArityError(f"Duplicate variable names in {list(names)}")
    if order not in _ORDERS:
        raise CommSeriesError(f"Unknown monomial order {order!r}")
    new_ring, *_ = ring([Symbol(name) for name in names], QQ, _ORDERS[order])
    return new_ring


def with_order(base: PolyRing, order: str) -> PolyRing:
    """Return the ring with the same variables as base under another monomial order."""
    return make_ring(variable_names(base), order)


def variable_names(base: PolyRing) -> List[str]:
    """Variable names of a ring, in variable-id order."""
    return [str(symbol) for symbol in base.symbols]


def to_qq(value: RationalLike):
    """Convert an exact rational to a coefficient of QQ."""
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


def constant(base: PolyRing, value: RationalLike) -> PolyElement:
    """The constant polynomial value in the ring base."""
    return base.ground_new(to_qq(value))


def arity(p: PolyElement) -> int:
    """Number of variables of the ring of p."""
    return p.ring.ngens


def constant_term(p: PolyElement) -> Fraction:
    """The coefficient of the empty monomial."""
    return to_fraction(p.coeff(1))


def lift(p: PolyElement, target: PolyRing) -> PolyElement:
    """
    Embed p into target, mapping variable i of p's ring to variable i of target.

    Extended automata (right derivatives, unions, gadgets) allocate their new
    variables after the original ones, so this is the canonical embedding.
    """
    if p.ring == target:
        return p
    if p.ring.ngens > target.ngens:
        raise ArityError(
            f"Cannot embed a polynomial in {p.ring.ngens} variables into {target.ngens}"
        )
    return substitute(p, target.gens[: p.ring.ngens])


def _common(p: PolyElement, q: PolyElement) -> Tuple[PolyElement, PolyElement]:
    if p.ring == q.ring:
        return p, q
    small, large = (p, q) if p.ring.ngens <= q.ring.ngens else (q, p)
    if tuple(large.ring.symbols[: small.ring.ngens]) != tuple(small.ring.symbols):
        raise ArityError(
            f"Polynomials over {variable_names(p.ring)} and {variable_names(q.ring)} are incompatible"
        )
    padded = lift(small, large.ring)
    return (padded, large) if small is p else (large, padded)


def add(p: PolyElement, q: PolyElement) -> PolyElement:
    p, q = _common(p, q)
    return p + q


def subtract(p: PolyElement, q: PolyElement) -> PolyElement:
    p, q = _common(p, q)
    return p - q


def scale(p: PolyElement, c: RationalLike) -> PolyElement:
    return p.mul_ground(to_qq(c))


def multiply(p: PolyElement, q: PolyElement) -> PolyElement:
    p, q = _common(p, q)
    return p * q


def power(p: PolyElement, exponent: int) -> PolyElement:
    """
    Raise p to a nonnegative integer power.

    Raises:
        CommSeriesError: If the exponent is negative
    """
    if exponent < 0:
        raise CommSeriesError(f"Negative exponent {exponent} is not allowed in Q[X]")
    return p**exponent


def evaluate(p: PolyElement, point: Sequence[RationalLike]) -> Fraction:
    """
    Evaluate p exactly at a rational point.

    Args:
        p: The polynomial
        point: One rational value per variable

    Returns:
        p(point) as a Fraction

    Raises:
        ArityError: If the point does not have one value per variable
    """
    if len(point) != p.ring.ngens:
        raise ArityError(
            f"Point of length {len(point)} for a polynomial in {p.ring.ngens} variables"
        )
    values = [to_fraction(v) for v in point]
    total = Fraction(0)
    for monom, coeff in p.iterterms():
        term = to_fraction(coeff)
        for value, exponent in zip(values, monom):
            if exponent:
                term *= value**exponent
        total += term
    return total


def substitute(p: PolyElement, images: Sequence[PolyElement]) -> PolyElement:
    """
    Simultaneously substitute X_i -> images[i].

    The images may live in a different ring than p; the result lives in theirs.

    Raises:
        ArityError: If there is not exactly one image per variable of p
    """
    if len(images) != p.ring.ngens:
        raise ArityError(
            f"{len(images)} images given for a polynomial in {p.ring.ngens} variables"
        )
    target = images[0].ring
    powers: List[Dict[int, PolyElement]] = [{} for _ in images]

    def image_power(i: int, exponent: int) -> PolyElement:
        cache = powers[i]
        if exponent not in cache:
            cache[exponent] = images[i] ** exponent
        return cache[exponent]

    result = target.zero
    for monom, coeff in p.iterterms():
        term = target.ground_new(coeff)
        for i, exponent in enumerate(monom):
            if exponent:
                term = term * image_power(i, exponent)
        result += term
    return result


def formal_partial(p: PolyElement, i: int) -> PolyElement:
    """The partial derivative of p with respect to variable i."""
    if not 0 <= i < p.ring.ngens:
        raise ArityError(f"Variable id {i} out of range for {p.ring.ngens} variables")
    return p.diff(p.ring.gens[i])


def leading_terms_first(p: PolyElement) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """Terms of p in grevlex-descending order, coefficients as Fractions."""
    return [(monom, to_fraction(coeff)) for monom, coeff in p.terms(order=grevlex)]


def _format_name(name: str) -> str:
    return name if _IDENTIFIER.match(name) else f"[{name}]"


def format_polynomial(p: PolyElement) -> str:
    """
    Render p in the input syntax, terms in grevlex-descending order.

    >>> R = make_ring(["A"])
    >>> format_polynomial((1 - R.gens[0] ** 2) ** 2)
    'A^4 - 2*A^2 + 1'
    """
    if not p:
        return "0"
    names = [_format_name(name) for name in variable_names(p.ring)]
    pieces: List[str] = []
    for monom, coeff in leading_terms_first(p):
        factors = []
        for name, exponent in zip(names, monom):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        magnitude = abs(coeff)
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(magnitude)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)
