"""
Shuffle products of series over disjoint alphabets

Over disjoint alphabets Σ and Γ a word w splits in exactly one way into its
Σ-letters and its Γ-letters, so (f ⧢ g)(w) = f(w|Σ) · g(w|Γ), and shuffle and
infiltration coincide.

For shuffle and infiltration automata each automaton learns to send the
other's letters to 0; the product of the configurations in the disjoint union
is then the shuffle product, since these letters act as derivations.

Hadamard letters act by substitution, so a product configuration recognises a
Hadamard product. Each automaton instead learns to ignore the other's letters
(Δ_b X_i = X_i), which makes ⟦X_i⟧ read w|Σ; the Hadamard product of the two
extended series is then f(w|Σ) · g(w|Γ).
"""

import logging
from typing import Optional

from sympy.polys.rings import PolyElement

from commseries.automata.closure import disjoint_union, extend_alphabet
from commseries.automata.mixed import MixedAutomaton, Presentation
from commseries.errors import AlphabetError
from commseries.product_rules import ProductMode

# Set up logging
logger = logging.getLogger(__name__)


def _check_operands(first: MixedAutomaton, second: MixedAutomaton) -> ProductMode:
    common = set(first.symbols) & set(second.symbols)
    if common:
        raise AlphabetError(f"The shuffle gadget needs disjoint alphabets, both contain {sorted(common)}")
    mode = first.uniform_mode
    if mode is None or second.uniform_mode != mode:
        raise AlphabetError(
            "The shuffle gadget needs two uniform-mode automata of the same kind, "
            f"got {first.modes} and {second.modes}"
        )
    return mode


def ignore_letters(automaton: MixedAutomaton, other: MixedAutomaton) -> MixedAutomaton:
    """Add the letters of other as Hadamard letters fixing every nonterminal."""
    extended = extend_alphabet(automaton, other.alphabet)
    delta = dict(extended.delta)
    for symbol in other.symbols:
        delta[symbol] = extended.gens
    return MixedAutomaton(extended.ring, extended.alphabet, delta, extended.output)


def shuffle_gadget(
    first: MixedAutomaton,
    second: MixedAutomaton,
    alpha: Optional[PolyElement] = None,
    beta: Optional[PolyElement] = None,
) -> Presentation:
    """
    Recognise ⟦alpha⟧ ⧢ ⟦beta⟧ for automata over disjoint alphabets.

    Args:
        first: Uniform-mode automaton over Σ
        second: Automaton over Γ with Σ ∩ Γ = ∅ and the same mode
        alpha: Configuration of first; defaults to its first nonterminal
        beta: Configuration of second; defaults to its first nonterminal

    Returns:
        An automaton over Σ ∪ Γ (letters of first, then of second) with a
        configuration recognising the shuffle product

    Raises:
        AlphabetError: If the alphabets overlap or the modes are mixed or differ
    """
    mode = _check_operands(first, second)
    alpha = first.gens[0] if alpha is None else alpha
    beta = second.gens[0] if beta is None else beta
    if mode == ProductMode.HADAMARD:
        left = ignore_letters(first, second)
        right = ignore_letters(second, first)
    else:
        left = extend_alphabet(first, second.alphabet)
        right = extend_alphabet(second, first.alphabet)
    union = disjoint_union(left, right)
    configuration = union.left(alpha) * union.right(beta)
    logger.info(f"{mode} shuffle gadget with {union.automaton.k} nonterminals")
    return Presentation(union.automaton, configuration)
