"""
Coinductive products of truncated series

All products share [ε](f ∥ g) = f_ε · g_ε and differ in how a left derivative
distributes over them (see ``ProductRule.derivative_terms``). Coefficients are
computed by recursion on the word with memoisation on (prefix of f, prefix of
g, remaining word), which is the coinductive definition read as a recurrence.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from commseries.errors import AlphabetError
from commseries.factory import create_rule
from commseries.oracle.series import TruncatedSeries
from commseries.product_rules import ProductMode
from commseries.utils import Word

ModeMap = Union[ProductMode, str, Mapping[str, Union[ProductMode, str]]]


def _modes(alphabet, modes: ModeMap):
    if isinstance(modes, (ProductMode, str)):
        return {letter: create_rule(modes) for letter in alphabet}
    missing = [letter for letter in alphabet if letter not in modes]
    if missing:
        raise AlphabetError(f"No product mode given for letters {missing}")
    return {letter: create_rule(modes[letter]) for letter in alphabet}


def product(f: TruncatedSeries, g: TruncatedSeries, modes: ModeMap) -> TruncatedSeries:
    """
    The mixed product of two truncations.

    Args:
        f: Left factor
        g: Right factor
        modes: One mode for all letters, or a map letter -> mode

    Returns:
        f ∥ g on the window min(L_f, L_g); exact, since the coefficient of a word
        only depends on coefficients of words that are not longer

    Raises:
        AlphabetError: If the alphabets differ or a letter has no mode
    """
    bound = f.common_window(g)
    rules = _modes(f.alphabet, modes)

    @lru_cache(maxsize=None)
    def coefficient(p: Word, q: Word, w: Word) -> Fraction:
        if not w:
            return f.coefficient(p) * g.coefficient(q)
        a, rest = w[0], w[1:]
        total = Fraction(0)
        for left, right in rules[a].derivative_terms:
            total += coefficient(p + (a,) if left else p, q + (a,) if right else q, rest)
        return total

    coeffs = {w: coefficient((), (), w) for w in f.words() if len(w) <= bound}
    return TruncatedSeries(f.alphabet, bound, coeffs)


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return product(f, g, ProductMode.HADAMARD)


def shuffle(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return product(f, g, ProductMode.SHUFFLE)


def infiltration(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return product(f, g, ProductMode.INFILTRATION)
