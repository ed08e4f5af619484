"""
Polynomial equation systems: polyrec difference systems and CDA differential systems

Both have the same shape: d coordinates, k unknowns f_1, ..., f_k, one
polynomial p_i^(j) over the unknowns for every coordinate j and unknown i,
and an initial value c. For a polyrec system p_i^(j) is the j-th shift of f_i,
for a CDA system its partial derivative in x_j. Coordinates are numbered from 1
and correspond to the letters a1, ..., ad of the companion automaton.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import ClassVar, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import make_ring, variable_names
from commseries.automata.mixed import MixedAutomaton
from commseries.automata.semantics import coefficient
from commseries.decide.commutativity import commutativity
from commseries.decide.verdict import PathWitness, Verdict
from commseries.errors import (
    ArityError,
    CommSeriesError,
    InconsistentSystemError,
    UnknownSymbolError,
)
from commseries.groebner.orders import MonomialOrder
from commseries.oracle.series import parikh
from commseries.product_rules import ProductMode
from commseries.utils import RationalLike, Word, format_word, run_batch, to_fraction

# Set up logging
logger = logging.getLogger(__name__)

Unknown = Union[int, str]


def letter(j: int) -> str:
    """The companion letter of coordinate j (numbered from 1)."""
    return f"a{j}"


@dataclass(frozen=True)
class EquationSystem:
    """
    A system of d x k polynomial equations with an initial value.

    Attributes:
        ring: Polynomial ring whose variables are the unknowns
        dims: Number of coordinates d
        equations: equations[j - 1][i] is p_i^(j)
        init: Initial value c_i of every unknown
    """

    kind: ClassVar[str] = "system"
    mode: ClassVar[ProductMode] = ProductMode.HADAMARD

    ring: PolyRing
    dims: int
    equations: Tuple[Tuple[PolyElement, ...], ...]
    init: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.dims < 1:
            raise ArityError(f"A {self.kind} system needs at least one coordinate, got {self.dims}")
        if len(self.equations) != self.dims:
            raise ArityError(f"{len(self.equations)} equation rows for {self.dims} coordinates")
        for j, row in enumerate(self.equations, start=1):
            if len(row) != self.k:
                raise ArityError(f"Coordinate {j} has {len(row)} equations for {self.k} unknowns")
            for p in row:
                if variable_names(p.ring) != self.unknowns:
                    raise ArityError(f"Equation over {variable_names(p.ring)} in a system over {self.unknowns}")
        if len(self.init) != self.k:
            raise ArityError(f"{len(self.init)} initial values for {self.k} unknowns")
        object.__setattr__(self, "equations", tuple(tuple(p.set_ring(self.ring) for p in row) for row in self.equations))
        object.__setattr__(self, "init", tuple(to_fraction(c) for c in self.init))

    @classmethod
    def build(
        cls,
        unknowns: Sequence[str],
        equations: Mapping[int, Mapping[str, PolyElement]],
        init: Mapping[str, RationalLike],
        dims: Optional[int] = None,
    ):
        """
        Build a system from named equations.

        Args:
            unknowns: Names of f_1, ..., f_k
            equations: coordinate j (from 1) -> unknown -> polynomial; every pair must be present
            init: unknown -> initial value; missing values are 0
            dims: Number of coordinates; defaults to the largest coordinate used

        Raises:
            ArityError: If an equation is missing
        """
        ring = make_ring(unknowns)
        if dims is None:
            dims = max(equations) if equations else 0
        stray = [j for j in equations if not 1 <= j <= dims]
        if stray:
            raise ArityError(f"Equations for coordinates {stray} outside 1..{dims}")
        rows: List[Tuple[PolyElement, ...]] = []
        for j in range(1, dims + 1):
            given = equations.get(j, {})
            missing = [name for name in unknowns if name not in given]
            if missing:
                raise ArityError(f"Coordinate {j} has no equation for {missing}")
            rows.append(tuple(given[name] for name in unknowns))
        for name in init:
            if name not in unknowns:
                raise UnknownSymbolError(f"Initial value given for unknown {name!r}")
        values = tuple(to_fraction(init.get(name, 0)) for name in unknowns)
        return cls(ring, dims, tuple(rows), values)

    @property
    def k(self) -> int:
        return self.ring.ngens

    @property
    def unknowns(self) -> List[str]:
        return variable_names(self.ring)

    @property
    def letters(self) -> Tuple[str, ...]:
        return tuple(letter(j) for j in range(1, self.dims + 1))

    def unknown_index(self, unknown: Unknown) -> int:
        """Position of an unknown given by name or by 0-based index."""
        if isinstance(unknown, int):
            if not 0 <= unknown < self.k:
                raise UnknownSymbolError(f"Unknown index {unknown} out of range for {self.k} unknowns")
            return unknown
        try:
            return self.unknowns.index(unknown)
        except ValueError:
            raise UnknownSymbolError(f"Unknown {unknown!r} is not one of {self.unknowns}")

    def check_coordinate(self, j: int) -> None:
        if not 1 <= j <= self.dims:
            raise CommSeriesError(f"Coordinate {j} out of range 1..{self.dims}")

    def companion(self) -> MixedAutomaton:
        """
        The companion automaton: letter a_j acts by the equations of coordinate j,
        outputs are the initial values.
        """
        alphabet = tuple((symbol, self.mode) for symbol in self.letters)
        delta = {symbol: row for symbol, row in zip(self.letters, self.equations)}
        return MixedAutomaton(self.ring, alphabet, delta, self.init)


@dataclass(frozen=True)
class PolyrecSystem(EquationSystem):
    """σ_j f_i = p_i^(j)(f_1, ..., f_k) with f(0) = c."""

    kind: ClassVar[str] = "polyrec"
    mode: ClassVar[ProductMode] = ProductMode.HADAMARD


@dataclass(frozen=True)
class CDASystem(EquationSystem):
    """∂_{x_j} f_i = p_i^(j)(f_1, ..., f_k) with f(0) = c."""

    kind: ClassVar[str] = "cda"
    mode: ClassVar[ProductMode] = ProductMode.SHUFFLE


@dataclass(frozen=True)
class PolyrecConstant:
    """A polyrec system of dimension 0: just the values of the unknowns."""

    unknowns: Tuple[str, ...]
    values: Tuple[Fraction, ...]


def canonical_path(system: EquationSystem, point: Sequence[int]) -> Word:
    """
    The monotone lattice path a1^n1 ... ad^nd to a point.

    Raises:
        ArityError: If the point does not have d coordinates
        CommSeriesError: If a coordinate is negative
    """
    if len(point) != system.dims:
        raise ArityError(f"Point {tuple(point)} has {len(point)} coordinates, the system has {system.dims}")
    if any(n < 0 for n in point):
        raise CommSeriesError(f"Point {tuple(point)} has a negative coordinate")
    word: Tuple[str, ...] = ()
    for j, n in enumerate(point, start=1):
        word += (letter(j),) * n
    return word


def check_components(
    system: EquationSystem,
    order: Optional[MonomialOrder] = None,
    concurrent: bool = False,
    max_concurrent: int = 4,
) -> Verdict:
    """
    Check commutativity of ⟦X_i⟧ in the companion automaton for every unknown.

    Returns:
        The first failing component's verdict, with its witness also given as
        a pair of lattice paths; otherwise a positive verdict whose index is
        the largest stabilisation index
    """
    automaton = system.companion()
    tasks = [partial(commutativity, automaton, x, order) for x in automaton.gens]
    verdicts = run_batch(tasks, concurrent, max_concurrent)
    index = max(verdict.stabilization_index for verdict in verdicts)
    for name, verdict in zip(system.unknowns, verdicts):
        if verdict.answer:
            continue
        w = verdict.witness
        path = PathWitness(
            unknown=name,
            point=parikh(w.word, automaton.symbols),
            first=w.word,
            second=w.other_word,
            first_value=w.value,
            second_value=w.other_value,
        )
        logger.info(f"The {system.kind} system is not solvable: {path}")
        return Verdict(
            False,
            witness=w,
            stabilization_index=index,
            failed_check=verdict.failed_check,
            path=path,
        )
    return Verdict(True, stabilization_index=index)


def value_at(
    system: EquationSystem,
    point: Sequence[int],
    unknown: Unknown,
    allow_inconsistent: bool = False,
    verdict: Optional[Verdict] = None,
) -> Fraction:
    """
    Coefficient of the companion automaton along the canonical path to a point.

    Args:
        system: The system
        point: A point of N^d
        unknown: Name or 0-based index of the unknown
        allow_inconsistent: Skip the solvability check and accept the
            canonical-path value
        verdict: A solvability verdict computed earlier for this system

    Raises:
        InconsistentSystemError: If the system has no solution and the
            override is not set
    """
    i = system.unknown_index(unknown)
    word = canonical_path(system, point)
    if allow_inconsistent:
        logger.warning(
            f"Reading {system.unknowns[i]}{tuple(point)} along the canonical path "
            f"{format_word(word)} without checking that the {system.kind} system is solvable"
        )
    else:
        if verdict is None:
            verdict = check_components(system)
        if not verdict.answer:
            raise InconsistentSystemError(
                f"The {system.kind} system has no solution, values depend on the path: {verdict.path}"
            )
    automaton = system.companion()
    return coefficient(automaton, automaton.gens[i], word)
