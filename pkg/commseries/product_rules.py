"""
Abstract base class for product rules
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Sequence, Tuple

from sympy.polys.rings import PolyElement

from commseries.algebra.twisted import (
    Extension,
    extend_derivation,
    extend_endomorphism,
    extend_sigma_derivation,
)


class ProductMode(str, Enum):
    """How a letter acts on products of series."""

    HADAMARD = "hadamard"
    SHUFFLE = "shuffle"
    INFILTRATION = "infiltration"

    def __str__(self) -> str:
        return self.value


class ProductRule(ABC):
    """
    Abstract base class for the product rule followed by a letter.

    A rule says two things about a letter a: how the left derivative by a
    distributes over a product of series, and therefore how the transition of
    a on generators extends to all configurations.
    """

    mode: ProductMode

    @abstractmethod
    def extend(self, images: Sequence[PolyElement]) -> Extension:
        """
        Extend generator images to an action on all configurations.

        Args:
            images: Image of each generator, in generator order

        Returns:
            The map on Q[X] compatible with this product rule
        """
        pass

    @property
    @abstractmethod
    def derivative_terms(self) -> Tuple[Tuple[bool, bool], ...]:
        """
        Summands of the derivative of a product.

        Each pair says whether the letter is consumed by the left and by the
        right factor: d(f g) is the sum over pairs (l, r) of d^l f * d^r g.
        """
        pass


class HadamardRule(ProductRule):
    """Synchronising: d(f ⊙ g) = df ⊙ dg."""

    mode = ProductMode.HADAMARD

    def extend(self, images: Sequence[PolyElement]) -> Extension:
        return extend_endomorphism(images)

    @property
    def derivative_terms(self) -> Tuple[Tuple[bool, bool], ...]:
        return ((True, True),)


class ShuffleRule(ProductRule):
    """Interleaving: d(f ⧢ g) = df ⧢ g + f ⧢ dg."""

    mode = ProductMode.SHUFFLE

    def extend(self, images: Sequence[PolyElement]) -> Extension:
        return extend_derivation(images)

    @property
    def derivative_terms(self) -> Tuple[Tuple[bool, bool], ...]:
        return ((True, False), (False, True))


class InfiltrationRule(ProductRule):
    """Synchronising interleaving: d(f ↑ g) = df ↑ g + f ↑ dg + df ↑ dg."""

    mode = ProductMode.INFILTRATION

    def extend(self, images: Sequence[PolyElement]) -> Extension:
        return extend_sigma_derivation(images)

    @property
    def derivative_terms(self) -> Tuple[Tuple[bool, bool], ...]:
        return ((True, False), (False, True), (True, True))
