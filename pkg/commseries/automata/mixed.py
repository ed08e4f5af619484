"""
Mixed-product automata

An automaton has nonterminals X_1, ..., X_k (the variables of its ring), an
alphabet in which every letter carries a product mode, one transition
polynomial per (letter, nonterminal) and a rational output per nonterminal.
Hadamard, shuffle and infiltration automata are the uniform-mode cases.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import lift, make_ring, variable_names
from commseries.algebra.twisted import Extension
from commseries.errors import AlphabetError, ArityError, UnknownSymbolError
from commseries.factory import create_rule
from commseries.product_rules import ProductMode
from commseries.utils import RationalLike, to_fraction

# Set up logging
logger = logging.getLogger(__name__)

ModeLike = Union[ProductMode, str]
AlphabetLike = Union[Mapping[str, ModeLike], Sequence[Tuple[str, ModeLike]]]


def normalize_alphabet(alphabet: AlphabetLike) -> Tuple[Tuple[str, ProductMode], ...]:
    """
    Turn a map or a sequence of (letter, mode) pairs into a tuple of pairs.

    Raises:
        AlphabetError: If a letter is repeated or a mode is unknown
    """
    pairs = list(alphabet.items()) if isinstance(alphabet, Mapping) else list(alphabet)
    seen = set()
    result = []
    for symbol, mode in pairs:
        if symbol in seen:
            raise AlphabetError(f"Letter {symbol!r} declared twice")
        seen.add(symbol)
        try:
            result.append((symbol, ProductMode(mode)))
        except ValueError:
            raise AlphabetError(f"Unknown product mode {mode!r} for letter {symbol!r}")
    return tuple(result)


@dataclass(frozen=True)
class MixedAutomaton:
    """
    A mixed-product automaton over Q.

    Attributes:
        ring: Polynomial ring whose variables are the nonterminals
        alphabet: Letters with their product modes, in enumeration order
        delta: For every letter, the images of X_1, ..., X_k
        output: Output value of every nonterminal
    """

    ring: PolyRing
    alphabet: Tuple[Tuple[str, ProductMode], ...]
    delta: Mapping[str, Tuple[PolyElement, ...]]
    output: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        alphabet = normalize_alphabet(self.alphabet)
        symbols = [symbol for symbol, _ in alphabet]
        unknown = [symbol for symbol in self.delta if symbol not in symbols]
        if unknown:
            raise UnknownSymbolError(f"Transitions given for undeclared letters {unknown}")
        delta: Dict[str, Tuple[PolyElement, ...]] = {}
        for symbol in symbols:
            images = self.delta.get(symbol)
            if images is None:
                images = (self.ring.zero,) * self.k
            if len(images) != self.k:
                raise ArityError(
                    f"Letter {symbol!r} has {len(images)} transitions for {self.k} nonterminals"
                )
            delta[symbol] = tuple(self.configuration(p) for p in images)
        if len(self.output) != self.k:
            raise ArityError(f"{len(self.output)} outputs given for {self.k} nonterminals")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "output", tuple(to_fraction(c) for c in self.output))

    @classmethod
    def build(
        cls,
        nonterminals: Sequence[str],
        alphabet: AlphabetLike,
        transitions: Mapping[str, Mapping[str, PolyElement]],
        output: Mapping[str, RationalLike],
        order: str = "grevlex",
    ) -> "MixedAutomaton":
        """
        Build an automaton from named transitions.

        Missing transitions are zero and missing outputs are 0.

        Args:
            nonterminals: Names of X_1, ..., X_k
            alphabet: Letters and their modes
            transitions: letter -> nonterminal -> polynomial over the nonterminals
            output: nonterminal -> rational
            order: Monomial order of the ring

        Returns:
            The automaton
        """
        ring = make_ring(nonterminals, order)
        names = list(nonterminals)
        for symbol, images in transitions.items():
            for name in images:
                if name not in names:
                    raise UnknownSymbolError(f"Transition of letter {symbol!r} for unknown nonterminal {name!r}")
        for name in output:
            if name not in names:
                raise UnknownSymbolError(f"Output given for unknown nonterminal {name!r}")
        delta = {
            symbol: tuple(images.get(name, ring.zero) for name in names)
            for symbol, images in transitions.items()
        }
        values = tuple(to_fraction(output.get(name, 0)) for name in names)
        return cls(ring, normalize_alphabet(alphabet), delta, values)

    @property
    def k(self) -> int:
        return self.ring.ngens

    @property
    def names(self) -> List[str]:
        return variable_names(self.ring)

    @property
    def gens(self) -> Tuple[PolyElement, ...]:
        return tuple(self.ring.gens)

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(symbol for symbol, _ in self.alphabet)

    @property
    def modes(self) -> Dict[str, ProductMode]:
        return dict(self.alphabet)

    def mode(self, symbol: str) -> ProductMode:
        for letter, mode in self.alphabet:
            if letter == symbol:
                return mode
        raise UnknownSymbolError(f"Letter {symbol!r} is not in {list(self.symbols)}")

    @property
    def uniform_mode(self) -> Optional[ProductMode]:
        """The common mode of all letters, or None for a genuinely mixed alphabet."""
        modes = {mode for _, mode in self.alphabet}
        return modes.pop() if len(modes) == 1 else None

    def variable(self, name: str) -> PolyElement:
        """The generator of the named nonterminal."""
        try:
            return self.ring.gens[self.names.index(name)]
        except ValueError:
            raise UnknownSymbolError(f"Unknown nonterminal {name!r}, expected one of {self.names}")

    def configuration(self, p: PolyElement) -> PolyElement:
        """
        Bring a polynomial into this automaton's ring.

        Accepts polynomials over the same names under another monomial order,
        and polynomials over a prefix of the nonterminals.

        Raises:
            ArityError: If p is over other variables
        """
        if p.ring == self.ring:
            return p
        names = variable_names(p.ring)
        if names == self.names:
            return p.set_ring(self.ring)
        if names == self.names[: len(names)]:
            return lift(p, self.ring)
        raise ArityError(f"Configuration over {names} does not fit the nonterminals {self.names}")

    @cached_property
    def _actions(self) -> Dict[str, Extension]:
        return {
            symbol: create_rule(mode).extend(self.delta[symbol])
            for symbol, mode in self.alphabet
        }

    def action(self, symbol: str) -> Extension:
        """The extension of the transitions of a letter to all configurations."""
        if symbol not in self.delta:
            raise UnknownSymbolError(f"Letter {symbol!r} is not in {list(self.symbols)}")
        return self._actions[symbol]

    def with_output(self, output: Sequence[RationalLike]) -> "MixedAutomaton":
        """The same automaton with another output function."""
        return MixedAutomaton(self.ring, self.alphabet, self.delta, tuple(output))

    def __str__(self) -> str:
        letters = ", ".join(f"{symbol}: {mode}" for symbol, mode in self.alphabet)
        return f"MixedAutomaton({self.k} nonterminals, alphabet {{{letters}}})"


class Presentation(NamedTuple):
    """An automaton together with a configuration recognising a series."""

    automaton: MixedAutomaton
    configuration: PolyElement
