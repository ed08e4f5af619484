"""
Document model of the input language

A document is a sequence of named definitions. Polynomials are kept as
expression trees until a definition is turned into library objects, since the
variables of a system are only known once its block is closed. Source spans
are carried for diagnostics and are ignored by equality.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import constant, make_ring
from commseries.apps.systems import CDASystem, EquationSystem, PolyrecSystem
from commseries.automata.mixed import MixedAutomaton
from commseries.errors import UnknownSymbolError, UsageError


@dataclass(frozen=True)
class Span:
    line: int
    column: int


NO_SPAN = Span(0, 0)


@dataclass(frozen=True)
class Num:
    value: Fraction
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class BinOp:
    """A sum, difference or product; op is one of "+", "-", "*"."""

    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: Span = field(default=NO_SPAN, compare=False)


Expr = Union[Num, Var, Neg, BinOp, Pow]


def to_polynomial(expr: Expr, ring: PolyRing) -> PolyElement:
    """
    Evaluate an expression tree in a polynomial ring.

    Raises:
        UnknownSymbolError: If a variable is not a generator of the ring
    """
    if isinstance(expr, Num):
        return constant(ring, expr.value)
    if isinstance(expr, Var):
        names = [str(symbol) for symbol in ring.symbols]
        if expr.name not in names:
            raise UnknownSymbolError(f"Unknown variable {expr.name!r}, expected one of {names}")
        return ring.gens[names.index(expr.name)]
    if isinstance(expr, Neg):
        return -to_polynomial(expr.operand, ring)
    if isinstance(expr, Pow):
        return to_polynomial(expr.base, ring) ** expr.exponent
    left = to_polynomial(expr.left, ring)
    right = to_polynomial(expr.right, ring)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return left - right
    return left * right


@dataclass(frozen=True)
class AutomatonDef:
    """
    An automaton block.

    Attributes:
        name: Definition name
        alphabet: (letter, mode) pairs with every mode resolved
        nonterminals: Nonterminal names, in variable order
        output: (nonterminal, value) pairs as written
        delta: (letter, nonterminal, polynomial) transitions as written
    """

    name: str
    alphabet: Tuple[Tuple[str, str], ...]
    nonterminals: Tuple[str, ...]
    output: Tuple[Tuple[str, Fraction], ...] = ()
    delta: Tuple[Tuple[str, str, Expr], ...] = ()
    span: Span = field(default=NO_SPAN, compare=False)

    kind = "automaton"

    def ring(self) -> PolyRing:
        return make_ring(self.nonterminals)

    def to_automaton(self) -> MixedAutomaton:
        ring = self.ring()
        transitions: Dict[str, Dict[str, PolyElement]] = {}
        for symbol, name, expr in self.delta:
            transitions.setdefault(symbol, {})[name] = to_polynomial(expr, ring)
        return MixedAutomaton.build(self.nonterminals, self.alphabet, transitions, dict(self.output))


@dataclass(frozen=True)
class SystemDef:
    """
    A polyrec or cda block.

    Attributes:
        kind: "polyrec" or "cda"
        name: Definition name
        unknowns: Declared unknowns, in variable order
        equations: (coordinate, unknown, polynomial) as written
        init: (unknown, value) pairs as written
        dims: Declared number of coordinates, if any
        variables: Independent variables (name, coordinate) adjoined as unknowns
    """

    kind: str
    name: str
    unknowns: Tuple[str, ...]
    equations: Tuple[Tuple[int, str, Expr], ...] = ()
    init: Tuple[Tuple[str, Fraction], ...] = ()
    dims: Optional[int] = None
    variables: Tuple[Tuple[str, int], ...] = ()
    span: Span = field(default=NO_SPAN, compare=False)

    @property
    def all_unknowns(self) -> Tuple[str, ...]:
        return self.unknowns + tuple(name for name, _ in self.variables)

    @property
    def coordinates(self) -> int:
        """The declared dimension, or the largest coordinate used."""
        if self.dims is not None:
            return self.dims
        used = [j for j, _, _ in self.equations] + [j for _, j in self.variables]
        return max(used, default=0)

    def to_system(self) -> EquationSystem:
        names = self.all_unknowns
        ring = make_ring(names)
        equations: Dict[int, Dict[str, PolyElement]] = {}
        for j, name, expr in self.equations:
            equations.setdefault(j, {})[name] = to_polynomial(expr, ring)
        for name, coordinate in self.variables:
            for j in range(1, self.coordinates + 1):
                equations.setdefault(j, {})[name] = ring.one if j == coordinate else ring.zero
        cls = CDASystem if self.kind == "cda" else PolyrecSystem
        return cls.build(names, equations, dict(self.init), self.coordinates)


Definition = Union[AutomatonDef, SystemDef]


@dataclass(frozen=True)
class Document:
    """A parsed input file: definitions with unique names, in source order."""

    items: Tuple[Definition, ...] = ()

    @property
    def names(self) -> List[str]:
        return [item.name for item in self.items]

    def get(self, name: Optional[str] = None, kind: Optional[str] = None) -> Definition:
        """
        Look up a definition by name, or the sole definition of the wanted kind.

        Args:
            name: Definition name; may be omitted when there is exactly one candidate
            kind: "automaton", "polyrec" or "cda" to restrict the candidates

        Raises:
            UsageError: If the name is unknown, has another kind, or is ambiguous
        """
        candidates = [item for item in self.items if kind is None or item.kind == kind]
        if name is not None:
            for item in self.items:
                if item.name == name:
                    if kind is not None and item.kind != kind:
                        raise UsageError(f"{name!r} is a {item.kind} definition, expected {kind}")
                    return item
            raise UsageError(f"No definition named {name!r}, found {self.names}")
        if len(candidates) != 1:
            wanted = f"{kind} " if kind else ""
            raise UsageError(
                f"Expected exactly one {wanted}definition, found {len(candidates)}; choose one with --name"
            )
        return candidates[0]
