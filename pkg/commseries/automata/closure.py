"""
Closure constructions on mixed automata

* ``disjoint_union`` puts two automata over the same alphabet side by side, so
  that linear combinations and products of their configurations make sense;
* ``extend_alphabet`` adds letters that act by zero on every nonterminal;
* ``right_derivative_automaton`` adjoins nonterminals Y_i recognising the
  right derivatives of the X_i.

New nonterminals are always allocated after the existing ones.
"""

import logging
from typing import Callable, List, NamedTuple, Sequence

from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import evaluate, lift, make_ring, substitute
from commseries.automata.mixed import AlphabetLike, MixedAutomaton, normalize_alphabet
from commseries.errors import AlphabetError
from commseries.factory import create_rule

# Set up logging
logger = logging.getLogger(__name__)

Embedding = Callable[[PolyElement], PolyElement]


class DisjointUnion(NamedTuple):
    """The union automaton and the embeddings of both operands' configurations."""

    automaton: MixedAutomaton
    left: Embedding
    right: Embedding


class RightDerivative(NamedTuple):
    """
    The automaton A' over X ∪ Y and the representation operator R_a.

    R_a maps a configuration α over X to a configuration over X ∪ Y with
    ⟦R_a(α)⟧ = ⟦α⟧∂_a.
    """

    automaton: MixedAutomaton
    represent: Embedding


def fresh_names(taken: Sequence[str], wanted: Sequence[str]) -> List[str]:
    """Rename wanted names that clash with taken ones (or each other) by appending primes."""
    used = set(taken)
    result = []
    for name in wanted:
        while name in used:
            name += "'"
        used.add(name)
        result.append(name)
    return result


def disjoint_union(first: MixedAutomaton, second: MixedAutomaton) -> DisjointUnion:
    """
    Place two automata over the same alphabet side by side.

    The nonterminals of second follow those of first and are renamed with
    primes where their names clash. Both embeddings preserve semantics.

    Args:
        first: Automaton A with k nonterminals
        second: Automaton B with l nonterminals, same letters and modes as A

    Returns:
        The union with k + l nonterminals and the embeddings ι_A, ι_B

    Raises:
        AlphabetError: If the alphabets or modes differ
    """
    if first.modes != second.modes:
        raise AlphabetError(
            f"Cannot unite automata over {first.modes} and {second.modes}: letters or modes differ"
        )
    names = first.names + fresh_names(first.names, second.names)
    ring = make_ring(names)
    k = first.k
    left_gens = ring.gens[:k]
    right_gens = ring.gens[k:]

    def left(p: PolyElement) -> PolyElement:
        return substitute(first.configuration(p), left_gens)

    def right(p: PolyElement) -> PolyElement:
        return substitute(second.configuration(p), right_gens)

    delta = {
        symbol: tuple(left(p) for p in first.delta[symbol])
        + tuple(right(p) for p in second.delta[symbol])
        for symbol in first.symbols
    }
    union = MixedAutomaton(ring, first.alphabet, delta, first.output + second.output)
    logger.debug(f"Disjoint union of {first.k} and {second.k} nonterminals")
    return DisjointUnion(union, left, right)


def extend_alphabet(automaton: MixedAutomaton, letters: AlphabetLike) -> MixedAutomaton:
    """
    Add letters that map every nonterminal to 0.

    Raises:
        AlphabetError: If a letter is already in the alphabet
    """
    extra = normalize_alphabet(letters)
    clash = [symbol for symbol, _ in extra if symbol in automaton.symbols]
    if clash:
        raise AlphabetError(f"Letters {clash} are already in the alphabet")
    return MixedAutomaton(
        automaton.ring,
        automaton.alphabet + extra,
        automaton.delta,
        automaton.output,
    )


def right_derivative_automaton(automaton: MixedAutomaton, symbol: str) -> RightDerivative:
    """
    Build an automaton recognising the right derivatives by a letter.

    The new nonterminal Y_i (named "X_i/a") stands for ⟦X_i⟧∂_a. Its output is
    the a-coefficient of ⟦X_i⟧, i.e. F(Δ_a X_i), and Δ_b Y_i := R_a(Δ_b X_i),
    where R_a extends X_i -> Y_i following the mode of a: substitution
    for hadamard letters, the derivation sum_j ∂p/∂X_j * Y_j for shuffle
    letters and p(X + Y) - p for infiltration letters. The X transitions are
    unchanged.

    Args:
        automaton: The automaton A
        symbol: The letter a

    Returns:
        The automaton over X ∪ Y and the operator R_a

    Raises:
        UnknownSymbolError: If the letter is not in the alphabet
    """
    mode = automaton.mode(symbol)
    names = automaton.names
    derived = fresh_names(names, [f"{name}/{symbol}" for name in names])
    ring = make_ring(names + derived)
    ys = ring.gens[automaton.k :]
    extension = create_rule(mode).extend(ys)

    def represent(p: PolyElement) -> PolyElement:
        return extension(automaton.configuration(p))

    delta = {
        letter: tuple(lift(p, ring) for p in automaton.delta[letter])
        + tuple(represent(p) for p in automaton.delta[letter])
        for letter in automaton.symbols
    }
    output = automaton.output + tuple(
        evaluate(p, automaton.output) for p in automaton.delta[symbol]
    )
    derivative = MixedAutomaton(ring, automaton.alphabet, delta, output)
    logger.debug(f"Right derivative by {symbol!r} ({mode}) adds {len(derived)} nonterminals")
    return RightDerivative(derivative, represent)

