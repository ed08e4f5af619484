from fractions import Fraction

import pytest

from commseries.algebra.polynomials import (
    add,
    arity,
    constant,
    constant_term,
    evaluate,
    format_polynomial,
    formal_partial,
    lift,
    make_ring,
    multiply,
    power,
    scale,
    substitute,
    subtract,
    variable_names,
    with_order,
)
from commseries.errors import ArityError, CommSeriesError


def test_make_ring_keeps_variable_order() -> None:
    R = make_ring(["X", "Y", "E"])
    assert variable_names(R) == ["X", "Y", "E"]
    assert R.ngens == 3


def test_make_ring_rejects_bad_names() -> None:
    with pytest.raises(ArityError):
        make_ring([])
    with pytest.raises(ArityError):
        make_ring(["A", "A"])
    with pytest.raises(CommSeriesError):
        make_ring(["A"], order="revlex")


def test_with_order_keeps_names() -> None:
    R = make_ring(["A", "B"])
    L = with_order(R, "lex")
    assert variable_names(L) == ["A", "B"]


def test_evaluate_is_exact() -> None:
    R = make_ring(["A"])
    (A,) = R.gens
    assert evaluate((1 - A**2) ** 2, [2]) == 9
    assert evaluate(1 - A**4, [2]) == -15
    assert evaluate(scale(A, Fraction(1, 3)) + 1, [Fraction(3, 4)]) == Fraction(5, 4)


def test_evaluate_checks_arity() -> None:
    R = make_ring(["A", "B"])
    with pytest.raises(ArityError):
        evaluate(R.gens[0], [1])


def test_constant_and_constant_term() -> None:
    R = make_ring(["A"])
    (A,) = R.gens
    assert evaluate(constant(R, "-5/2"), [7]) == Fraction(-5, 2)
    assert constant_term(3 + A) == 3
    assert constant_term(A**2) == 0
    assert arity(A) == 1


def test_substitute_simultaneously() -> None:
    R = make_ring(["X", "Y"])
    X, Y = R.gens
    assert substitute(X * Y + X, [Y, X]) == X * Y + Y
    assert substitute(X**2, [X + 1, Y]) == X**2 + 2 * X + 1
    with pytest.raises(ArityError):
        substitute(X, [X])


def test_lift_embeds_into_prefix_ring() -> None:
    small = make_ring(["X"])
    large = make_ring(["X", "Y"])
    (x,) = small.gens
    X, Y = large.gens
    assert lift(x**2 + 1, large) == X**2 + 1
    with pytest.raises(ArityError):
        lift(X * Y, small)


def test_arithmetic_across_prefix_rings() -> None:
    small = make_ring(["X"])
    large = make_ring(["X", "Y"])
    (x,) = small.gens
    X, Y = large.gens
    assert add(x, Y) == X + Y
    assert subtract(Y, x) == Y - X
    assert multiply(x, Y) == X * Y
    with pytest.raises(ArityError):
        add(x, make_ring(["Z"]).gens[0])


def test_power() -> None:
    R = make_ring(["A"])
    (A,) = R.gens
    assert power(1 - A, 2) == 1 - 2 * A + A**2
    assert power(A, 0) == R.one
    with pytest.raises(CommSeriesError):
        power(A, -1)


def test_formal_partial() -> None:
    R = make_ring(["X", "Y"])
    X, Y = R.gens
    assert formal_partial(X**2 * Y + Y, 0) == 2 * X * Y
    assert formal_partial(X**2 * Y + Y, 1) == X**2 + 1
    with pytest.raises(ArityError):
        formal_partial(X, 2)


def test_format_polynomial() -> None:
    R = make_ring(["A"])
    (A,) = R.gens
    assert format_polynomial((1 - A**2) ** 2) == "A^4 - 2*A^2 + 1"
    assert format_polynomial(R.zero) == "0"
    assert format_polynomial(-A + 1) == "-A + 1"
    assert format_polynomial(scale(A, Fraction(1, 2))) == "1/2*A"


def test_format_polynomial_brackets_generated_names() -> None:
    R = make_ring(["X", "X/a"])
    X, Y = R.gens
    assert format_polynomial(X * Y) == "X*[X/a]"
