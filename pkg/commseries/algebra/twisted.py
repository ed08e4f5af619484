"""
The three ways of extending an assignment of generator images to all of Q[X]

Given images Y_1, ..., Y_k of the generators X_1, ..., X_k:

* an endomorphism maps p to p(Y_1, ..., Y_k);
* a derivation maps p to sum_i dp/dX_i * Y_i (Leibniz rule);
* a sigma-derivation maps p to p(X_1 + Y_1, ..., X_k + Y_k) - p, so that
  D(p*q) = D(p)*q + p*D(q) + D(p)*D(q), i.e. S = 1 + D is an endomorphism.

The images may live in a larger ring than p whose first variables are the
variables of p (see ``lift``); results live in the images' ring.
"""

from typing import Callable, Sequence

from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import formal_partial, lift, substitute
from commseries.errors import ArityError

Extension = Callable[[PolyElement], PolyElement]


def _check(images: Sequence[PolyElement]) -> None:
    if not images:
        raise ArityError("An extension needs one image per generator")
    target = images[0].ring
    if any(image.ring != target for image in images):
        raise ArityError("All generator images must live in the same ring")
    if target.ngens < len(images):
        raise ArityError(
            f"{len(images)} images cannot live in a ring of {target.ngens} variables"
        )


def extend_endomorphism(images: Sequence[PolyElement]) -> Extension:
    """
    Extend X_i -> images[i] to the unique ring endomorphism.

    Args:
        images: One polynomial per generator

    Returns:
        The map p -> p(images)
    """
    images = tuple(images)
    _check(images)

    def endomorphism(p: PolyElement) -> PolyElement:
        return substitute(p, images)

    return endomorphism


def extend_derivation(images: Sequence[PolyElement]) -> Extension:
    """
    Extend X_i -> images[i] to the unique derivation of Q[X].

    Args:
        images: One polynomial per generator

    Returns:
        The map p -> sum_i dp/dX_i * images[i]
    """
    images = tuple(images)
    _check(images)
    target = images[0].ring

    def derivation(p: PolyElement) -> PolyElement:
        if p.ring.ngens != len(images):
            raise ArityError(
                f"Derivation over {len(images)} generators applied to {p.ring.ngens} variables"
            )
        result = target.zero
        for i, image in enumerate(images):
            if not image:
                continue
            partial = formal_partial(p, i)
            if partial:
                result += lift(partial, target) * image
        return result

    return derivation


def extend_sigma_derivation(images: Sequence[PolyElement]) -> Extension:
    """
    Extend X_i -> images[i] to the sigma-derivation D with S = 1 + D an endomorphism.

    Args:
        images: One polynomial per generator

    Returns:
        The map p -> p(X + images) - p
    """
    images = tuple(images)
    _check(images)
    target = images[0].ring
    shifted = tuple(target.gens[i] + image for i, image in enumerate(images))

    def sigma_derivation(p: PolyElement) -> PolyElement:
        return substitute(p, shifted) - lift(p, target)

    return sigma_derivation
