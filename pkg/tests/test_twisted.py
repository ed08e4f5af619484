import random

import pytest

from commseries.algebra.polynomials import make_ring
from commseries.algebra.twisted import (
    extend_derivation,
    extend_endomorphism,
    extend_sigma_derivation,
)
from commseries.errors import ArityError
from tests.randomized import random_polynomial

SEEDS = range(200)


def _instance(seed: int):
    rng = random.Random(seed)
    R = make_ring([f"X{i}" for i in range(1, rng.randint(1, 3) + 1)])
    images = [random_polynomial(rng, R) for _ in range(R.ngens)]
    p = random_polynomial(rng, R)
    q = random_polynomial(rng, R)
    return R, images, p, q


@pytest.mark.parametrize("seed", SEEDS)
def test_endomorphism_is_multiplicative(seed: int) -> None:
    R, images, p, q = _instance(seed)
    E = extend_endomorphism(images)
    assert E(p * q) == E(p) * E(q)
    assert E(p + q) == E(p) + E(q)
    assert E(R.one) == R.one


@pytest.mark.parametrize("seed", SEEDS)
def test_derivation_follows_leibniz(seed: int) -> None:
    R, images, p, q = _instance(seed)
    D = extend_derivation(images)
    assert D(p * q) == D(p) * q + p * D(q)
    assert D(R.one) == R.zero


@pytest.mark.parametrize("seed", SEEDS)
def test_sigma_derivation_follows_twisted_leibniz(seed: int) -> None:
    R, images, p, q = _instance(seed)
    D = extend_sigma_derivation(images)
    assert D(p * q) == D(p) * q + p * D(q) + D(p) * D(q)
    assert D(R.one) == R.zero


def test_extensions_on_generators() -> None:
    R = make_ring(["X", "Y"])
    X, Y = R.gens
    images = [X * Y, R.one]
    for extend in (extend_endomorphism, extend_derivation, extend_sigma_derivation):
        action = extend(images)
        assert action(X) == X * Y
        assert action(Y) == R.one


def test_images_may_live_in_a_larger_ring() -> None:
    small = make_ring(["X"])
    large = make_ring(["X", "Y"])
    X, Y = large.gens
    D = extend_derivation([Y])
    assert D(small.gens[0] ** 2) == 2 * X * Y


def test_extension_needs_images() -> None:
    with pytest.raises(ArityError):
        extend_endomorphism([])
