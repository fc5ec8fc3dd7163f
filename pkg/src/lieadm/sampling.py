"""Seeded random generators for property checks.

All helpers take a random.Random instance so that callers control
determinism; values are small rationals to keep exact arithmetic cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Algebra
from .errors import PreconditionError
from .linalg import Matrix, mat_from_rows, mat_inverse
from .multilinear import MultiMap

_DENOMINATORS = (1, 1, 1, 2, 3)


def random_fraction(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(_DENOMINATORS))


def random_vector(rng: random.Random, dim: int, span: int = 3) -> tuple[Fraction, ...]:
    return tuple(random_fraction(rng, span) for _ in range(dim))


def random_matrix(rng: random.Random, dim: int, span: int = 3) -> Matrix:
    return mat_from_rows(
        [[random_fraction(rng, span) for _ in range(dim)] for _ in range(dim)]
    )


def random_invertible_matrix(rng: random.Random, dim: int, span: int = 3) -> Matrix:
    """Rejection-sample an invertible matrix; singular draws are rare."""
    while True:
        m = random_matrix(rng, dim, span)
        try:
            mat_inverse(m)
        except PreconditionError:
            continue
        return m


def random_multimap(rng: random.Random, dim: int, arity: int, span: int = 3) -> MultiMap:
    size = dim ** (arity + 1)
    return MultiMap(
        dim, arity, tuple(random_fraction(rng, span) for _ in range(size))
    )


def random_symmetric_bilinear(rng: random.Random, dim: int, span: int = 3) -> MultiMap:
    values: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for i in range(dim):
        for j in range(i, dim):
            values[(i, j)] = random_vector(rng, dim, span)
    return MultiMap.from_basis_function(
        dim, 2, lambda t: values[(min(t), max(t))]
    )


def random_alternating_bilinear(rng: random.Random, dim: int, span: int = 3) -> MultiMap:
    values: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            values[(i, j)] = random_vector(rng, dim, span)

    def fn(t: tuple[int, ...]) -> tuple[Fraction, ...]:
        i, j = t
        if i == j:
            return tuple(Fraction(0) for _ in range(dim))
        if i < j:
            return values[(i, j)]
        return tuple(-x for x in values[(j, i)])

    return MultiMap.from_basis_function(dim, 2, fn)


def random_algebra(rng: random.Random, dim: int, span: int = 3) -> Algebra:
    tensor = tuple(
        tuple(
            tuple(random_fraction(rng, span) for _ in range(dim))
            for _ in range(dim)
        )
        for _ in range(dim)
    )
    return Algebra(dim, tensor)
