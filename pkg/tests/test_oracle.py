import random
from fractions import Fraction

import pytest

from commseries.errors import AlphabetError, UnknownSymbolError, WindowError
from commseries.oracle import (
    TruncatedSeries,
    commutative_up_to,
    hadamard,
    infiltration,
    left_derivative,
    parikh,
    product,
    right_derivative,
    shuffle,
)
from commseries.product_rules import ProductMode
from tests.randomized import letters, random_series

SEEDS = range(200)


def series(terms, max_len: int = 3) -> TruncatedSeries:
    return TruncatedSeries.from_words("ab", max_len, terms)


def test_absent_words_are_zero() -> None:
    f = series({"ab": 1, "ba": 0})
    assert f.coefficient(("a", "b")) == 1
    assert f.coefficient(("b", "a")) == 0
    assert ("b", "a") not in f.coeffs


def test_coefficient_beyond_window() -> None:
    with pytest.raises(WindowError):
        series({}, 1).coefficient(("a", "b"))


def test_unknown_letter_is_rejected() -> None:
    with pytest.raises(UnknownSymbolError):
        series({"ac": 1})


def test_equality_uses_the_smaller_window() -> None:
    assert series({"a": 1, "aab": 5}, 3) == series({"a": 1}, 2)
    assert series({"a": 1}, 2) != series({"b": 1}, 2)
    assert series({"a": 1}) != TruncatedSeries.from_words("abc", 3, {"a": 1})


def test_linear_operations() -> None:
    f = series({"a": 1, "ab": 2})
    g = series({"a": -1, "b": 3})
    assert f + g == series({"ab": 2, "b": 3})
    assert f - f == TruncatedSeries.zero("ab", 3)
    assert (f - f).is_zero()
    assert f.scale(Fraction(1, 2)) == series({"a": Fraction(1, 2), "ab": 1})
    with pytest.raises(AlphabetError):
        f + TruncatedSeries.zero("abc", 3)


def test_shuffle_of_ab_and_a() -> None:
    assert shuffle(series({"ab": 1}), series({"a": 1})) == series({"aab": 2, "aba": 1})


def test_infiltration_of_ab_and_a() -> None:
    assert infiltration(series({"ab": 1}), series({"a": 1})) == series({"aab": 2, "aba": 1, "ab": 1})


def test_hadamard_multiplies_pointwise() -> None:
    f = series({"a": 2, "ab": 3, "b": 1})
    g = series({"a": 5, "ab": -1})
    assert hadamard(f, g) == series({"a": 10, "ab": -3})
    assert hadamard(series({"ab": 1}), series({"a": 1})).is_zero()


def test_identities() -> None:
    f = series({"": 2, "a": 1, "ab": -3, "bba": 1})
    assert hadamard(f, TruncatedSeries.ones("ab", 3)) == f
    assert shuffle(f, TruncatedSeries.one("ab", 3)) == f
    assert infiltration(f, TruncatedSeries.one("ab", 3)) == f


def test_mixed_product_per_letter() -> None:
    f = series({"a": 1})
    g = series({"a": 1})
    mixed = product(f, g, {"a": "hadamard", "b": "shuffle"})
    assert mixed == series({"a": 1})
    with pytest.raises(AlphabetError):
        product(f, g, {"a": "hadamard"})


def test_products_are_commutative() -> None:
    f = series({"": 1, "a": 2, "ab": 1})
    g = series({"b": 1, "ba": -1})
    for mode in ("hadamard", "shuffle", "infiltration"):
        assert product(f, g, mode) == product(g, f, mode)


def test_product_window_is_the_smaller_one() -> None:
    assert shuffle(series({}, 3), series({}, 2)).max_len == 2


def test_derivatives() -> None:
    f = series({"ab": 1, "aab": 4, "b": 2})
    assert left_derivative(f, "a") == TruncatedSeries.from_words("ab", 2, {"b": 1, "ab": 4})
    assert right_derivative(f, "b") == TruncatedSeries.from_words("ab", 2, {"a": 1, "aa": 4, "": 2})
    assert left_derivative(f, "a").max_len == 2
    with pytest.raises(WindowError):
        left_derivative(series({}, 0), "a")
    with pytest.raises(UnknownSymbolError):
        right_derivative(f, "c")


def test_parikh() -> None:
    assert parikh(("a1", "a1", "a2"), ("a1", "a2")) == (2, 1)
    assert parikh((), ("a", "b")) == (0, 0)


def test_commutativity_violation() -> None:
    violation = commutative_up_to(series({"ab": 1}))
    assert violation is not None
    assert (violation.u, violation.v) == (("a", "b"), ("b", "a"))
    assert (violation.f_u, violation.f_v) == (1, 0)
    assert commutative_up_to(series({"ab": 1, "ba": 1, "aab": 2, "aba": 2, "baa": 2})) is None


def test_str() -> None:
    assert str(series({"": 1, "ab": Fraction(-1, 2)})) == "1·ε + -1/2·ab"
    assert str(series({})) == "0"


def _pair(seed: int):
    rng = random.Random(seed)
    sigma = letters(rng.randint(1, 3))
    L = 4 if len(sigma) <= 2 else 3
    return rng, sigma, random_series(rng, sigma, L), random_series(rng, sigma, L)


@pytest.mark.parametrize("seed", SEEDS)
def test_left_and_right_derivatives_commute(seed: int) -> None:
    rng, sigma, f, _ = _pair(seed)
    a, b = rng.choice(sigma), rng.choice(sigma)
    assert left_derivative(right_derivative(f, b), a) == right_derivative(left_derivative(f, a), b)


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("mode", list(ProductMode))
def test_products_are_commutative_and_associative(seed: int, mode: ProductMode) -> None:
    rng, sigma, f, g = _pair(seed)
    h = random_series(rng, sigma, f.max_len)
    assert product(f, g, mode) == product(g, f, mode)
    assert product(product(f, g, mode), h, mode) == product(f, product(g, h, mode), mode)


@pytest.mark.parametrize("seed", SEEDS)
def test_mixed_products_are_associative(seed: int) -> None:
    rng, sigma, f, g = _pair(seed)
    h = random_series(rng, sigma, f.max_len)
    modes = {a: rng.choice(list(ProductMode)) for a in sigma}
    assert product(product(f, g, modes), h, modes) == product(f, product(g, h, modes), modes)


@pytest.mark.parametrize("seed", SEEDS)
def test_infiltration_is_shuffle_on_disjoint_alphabets(seed: int) -> None:
    rng = random.Random(seed)
    sigma, gamma = letters(rng.randint(1, 2), "a"), letters(1, "b")
    union = tuple(sigma) + tuple(gamma)
    L = 4 if len(union) <= 2 else 3
    f = TruncatedSeries(union, L, random_series(rng, sigma, L).coeffs)
    g = TruncatedSeries(union, L, random_series(rng, gamma, L).coeffs)
    assert infiltration(f, g) == shuffle(f, g)


@pytest.mark.parametrize("seed", SEEDS)
def test_right_derivative_product_rules(seed: int) -> None:
    rng, sigma, f, g = _pair(seed)
    a = rng.choice(sigma)
    fa, ga = right_derivative(f, a), right_derivative(g, a)
    assert right_derivative(hadamard(f, g), a) == hadamard(fa, ga)
    assert right_derivative(shuffle(f, g), a) == shuffle(fa, g) + shuffle(f, ga)
    assert right_derivative(infiltration(f, g), a) == infiltration(fa, g) + infiltration(f, ga) + infiltration(fa, ga)
