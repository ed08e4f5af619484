"""
Monomial orders
"""

from dataclasses import dataclass

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import variable_names, with_order
from commseries.errors import ArityError, CommSeriesError

KINDS = ("grevlex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order on Q[X_1, ..., X_arity].

    Attributes:
        kind: "grevlex" (default, fast bases) or "lex" (elimination)
        arity: Number of variables
    """

    kind: str
    arity: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise CommSeriesError(f"Unknown monomial order {self.kind!r}, expected one of {KINDS}")

    @classmethod
    def of(cls, base: PolyRing, kind: str = "grevlex") -> "MonomialOrder":
        return cls(kind, base.ngens)

    def ring(self, base: PolyRing) -> PolyRing:
        """The ring with base's variables ordered by this order."""
        if base.ngens != self.arity:
            raise ArityError(f"Order on {self.arity} variables used with {base.ngens}")
        return with_order(base, self.kind)

    def convert(self, p: PolyElement, target: PolyRing) -> PolyElement:
        """Move p into target, which has the same variables possibly in another order."""
        if p.ring == target:
            return p
        if variable_names(p.ring) != variable_names(target):
            raise ArityError(
                f"Polynomial over {variable_names(p.ring)} used with an ideal over {variable_names(target)}"
            )
        return p.set_ring(target)
