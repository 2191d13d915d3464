"""Seeded random generation of scalars, coordinates and group elements.

All randomness in the package flows through ``random.Random`` instances so
that a fixed seed reproduces every suite byte for byte.  Congruence-subgroup
elements are produced as products of root elements with radical coordinates,
never by rejection sampling of raw matrices.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, AlgebraSpec, QuadElement
from .group import GroupElement
from .roots import Root, roots


def random_rational(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_algebra_element(
    spec: AlgebraSpec, rng: random.Random, min_degree: int = 0
) -> AlgebraElement:
    coeffs = []
    for m in spec.factors:
        coeffs.append(
            tuple(
                random_rational(rng) if k >= min_degree else Fraction(0)
                for k in range(m)
            )
        )
    return AlgebraElement(spec, tuple(coeffs))


def random_quad(
    spec: AlgebraSpec, rng: random.Random, min_degree: int = 0
) -> QuadElement:
    return QuadElement(
        random_algebra_element(spec, rng, min_degree),
        random_algebra_element(spec, rng, min_degree),
    )


def random_unit(spec: AlgebraSpec, rng: random.Random) -> AlgebraElement:
    while True:
        x = random_algebra_element(spec, rng)
        if x.is_unit():
            return x


def random_unit_quad(spec: AlgebraSpec, rng: random.Random) -> QuadElement:
    while True:
        x = random_quad(spec, rng)
        if x.is_unit():
            return x


def random_coordinate(
    root: Root, spec: AlgebraSpec, rng: random.Random, min_degree: int = 0
) -> AlgebraElement | QuadElement:
    if root.is_long:
        return random_algebra_element(spec, rng, min_degree)
    return random_quad(spec, rng, min_degree)


def random_symbols(
    n: int,
    spec: AlgebraSpec,
    rng: random.Random,
    count: int,
    min_degree: int = 0,
) -> list[tuple[Root, AlgebraElement | QuadElement, int]]:
    """Symbols for a random word of root elements."""
    universe = roots(n)
    out = []
    for _ in range(count):
        r = rng.choice(universe)
        out.append((r, random_coordinate(r, spec, rng, min_degree), 1))
    return out


def random_member(
    n: int, spec: AlgebraSpec, rng: random.Random, count: int = 8, min_degree: int = 0
) -> GroupElement:
    """A group member built as a product of random root elements."""
    m = GroupElement.identity(n, spec)
    for r, v, _ in random_symbols(n, spec, rng, count, min_degree):
        vq = v if isinstance(v, QuadElement) else QuadElement(v, spec.zero())
        m = m.right_mul_root(r, vq)
    return m
