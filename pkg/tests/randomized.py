"""
Seeded generators of small random polynomials and automata for the property suites
"""

import random
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import make_ring
from commseries.automata.mixed import MixedAutomaton
from commseries.oracle.series import TruncatedSeries
from commseries.product_rules import ProductMode
from commseries.utils import words_up_to

MODES = [mode.value for mode in ProductMode]


def random_polynomial(rng: random.Random, ring: PolyRing, max_degree: int = 2, max_terms: int = 3) -> PolyElement:
    p = ring.zero
    for _ in range(rng.randint(0, max_terms)):
        monomial = ring.one
        for _ in range(rng.randint(0, max_degree)):
            monomial *= ring.gens[rng.randrange(ring.ngens)]
        p += rng.choice([-2, -1, 1, 2]) * monomial
    return p


def random_automaton(
    rng: random.Random,
    k: int,
    letters: Sequence[str],
    mode: Optional[str] = None,
    max_degree: int = 2,
) -> MixedAutomaton:
    """An automaton with k nonterminals; mode None picks a mode per letter."""
    ring = make_ring([f"X{i}" for i in range(1, k + 1)])
    alphabet = tuple((a, mode or rng.choice(MODES)) for a in letters)
    delta = {a: tuple(random_polynomial(rng, ring, max_degree) for _ in range(k)) for a in letters}
    output = tuple(rng.randint(-2, 2) for _ in range(k))
    return MixedAutomaton(ring, alphabet, delta, output)


def letters(n: int, prefix: str = "a") -> Sequence[str]:
    return [f"{prefix}{j}" for j in range(1, n + 1)]


def tame_automaton(rng: random.Random, k: int, letters: Sequence[str]) -> MixedAutomaton:
    """
    An automaton whose configurations keep a small degree along long words.

    Updates are affine, except that a single nonterminal may get quadratic
    updates under shuffle letters, where each step raises the degree by one.
    """
    ring = make_ring([f"X{i}" for i in range(1, k + 1)])
    alphabet = tuple((a, rng.choice(MODES)) for a in letters)
    delta = {}
    for a, mode in alphabet:
        degree = 2 if k == 1 and mode == ProductMode.SHUFFLE.value else 1
        delta[a] = tuple(random_polynomial(rng, ring, degree) for _ in range(k))
    output = tuple(rng.randint(-2, 2) for _ in range(k))
    return MixedAutomaton(ring, alphabet, delta, output)


def random_series(rng: random.Random, alphabet: Sequence[str], max_len: int, density: float = 0.5) -> TruncatedSeries:
    coeffs = {
        word: rng.choice([-2, -1, 1, 2, Fraction(1, 2)])
        for word in words_up_to(alphabet, max_len)
        if rng.random() < density
    }
    return TruncatedSeries(tuple(alphabet), max_len, coeffs)


def random_output(rng: random.Random, k: int) -> List[Fraction]:
    return [Fraction(rng.randint(-2, 2)) for _ in range(k)]
