from __future__ import annotations

import logging
from collections.abc import Sequence
from math import isqrt

import numpy as np

from .exact import Matrix, Polynomial
from .linsys import ninth_base_point
from .projective import (
    PointConfiguration,
    ProjectiveMap,
    ProjectivePoint,
    canonicalize,
    frame_transform,
    veronese,
)
from .quadrics import HEAD, QuadricModel, build_model, lift_member

log = logging.getLogger("gale_buddy.generators")

RETRY_BUDGET = 1000


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), *(int(s) for s in stream)])


def random_vector(rng: np.random.Generator, size: int, bound: int) -> tuple[int, ...]:
    return tuple(int(v) for v in rng.integers(-bound, bound, size=size, endpoint=True))


def random_point(rng: np.random.Generator, n: int, bound: int) -> ProjectivePoint:
    if bound < 1:
        raise ValueError(f"generator_exhausted bound={bound}")
    for _ in range(RETRY_BUDGET):
        v = random_vector(rng, n + 1, bound)
        if any(v):
            return canonicalize(v)
    raise ValueError(f"generator_exhausted n={n} bound={bound}")


def random_config(rng: np.random.Generator, n: int, m: int, bound: int) -> PointConfiguration:
    if n < 1 or m < 1:
        raise ValueError(f"dimension_mismatch n={n} m={m}")
    if bound < 1:
        raise ValueError(f"generator_exhausted bound={bound}")
    for _ in range(RETRY_BUDGET):
        pts = [random_point(rng, n, bound) for _ in range(m)]
        if len(set(pts)) != m:
            continue
        config = PointConfiguration(n, tuple(pts))
        if m >= n + 2:
            try:
                frame_transform(config)
            except ValueError:
                continue
        return config
    raise ValueError(f"generator_exhausted n={n} m={m} bound={bound}")


def generate_config(n: int, m: int, seed: int, bound: int) -> PointConfiguration:
    return random_config(rng_for(seed), n, m, bound)


def random_invertible_map(rng: np.random.Generator, n: int, bound: int) -> ProjectiveMap:
    for _ in range(RETRY_BUDGET):
        m = Matrix.from_rows([random_vector(rng, n + 1, bound) for _ in range(n + 1)])
        if m.det():
            return ProjectiveMap(m)
    raise ValueError(f"generator_exhausted n={n} bound={bound}")


def random_permutation(rng: np.random.Generator, m: int) -> list[int]:
    return [int(i) for i in rng.permutation(m)]


def random_params(rng: np.random.Generator, count: int, bound: int) -> list[int]:
    if 2 * bound + 1 < count:
        raise ValueError(f"generator_exhausted count={count} bound={bound}")
    return sorted(int(v) for v in rng.choice(np.arange(-bound, bound + 1), size=count, replace=False))


def pencil_base_points(rng: np.random.Generator, bound: int) -> list[ProjectivePoint]:
    """Eight random plane points followed by the ninth base point of their pencil of cubics."""
    for _ in range(RETRY_BUDGET):
        config = random_config(rng, 2, 8, bound)
        try:
            q9 = ninth_base_point(config.points)
        except ValueError as e:
            log.debug("pencil_retry reason=%s", e)
            continue
        return [*config.points, q9]
    raise ValueError(f"generator_exhausted bound={bound}")


def random_binary_quadratic(rng: np.random.Generator, bound: int) -> Polynomial:
    return Polynomial.from_coefficients(2, 2, random_vector(rng, 3, bound))


def square_quartic_member(model: QuadricModel, rng: np.random.Generator, bound: int) -> ProjectivePoint:
    """A member lying over the square of a binary quadratic that misses every model point."""
    if model.points is None:
        raise ValueError("model_without_points")
    for _ in range(RETRY_BUDGET):
        form = random_binary_quadratic(rng, bound)
        values = [form.evaluate(q.coords) for q in model.points]
        if any(not v for v in values):
            continue
        return lift_member(model, values[:HEAD])
    raise ValueError(f"generator_exhausted bound={bound}")


# x^4 + 206 x^2 z^2 + z^4 takes the values 1, 29^2 and 44^2 on these points
OPEN_QUARTIC = (1, 0, 206, 0, 1)
_SQUARE_VALUED = ((1, 0), (0, 1), (2, 1), (2, -1), (1, 2), (1, -2), (3, 1), (3, -1), (1, 3), (1, -3))
OPEN_MEMBER_MAX_N = len(_SQUARE_VALUED) - 3


def open_locus_member(n: int) -> tuple[QuadricModel, ProjectivePoint]:
    """A model with a member over a squarefree branch quartic, for 3 <= n <= 7."""
    if not 3 <= n <= OPEN_MEMBER_MAX_N:
        raise ValueError(f"open_member_unavailable n={n}")
    points = [canonicalize(q) for q in _SQUARE_VALUED[: n + 3]]
    model = build_model(points)
    quartic = Polynomial.from_coefficients(2, 4, OPEN_QUARTIC)
    head = [isqrt(int(quartic.evaluate(q.coords))) for q in points[:HEAD]]
    return model, lift_member(model, head)


def plane_points(rng: np.random.Generator, count: int, bound: int) -> list[ProjectivePoint]:
    return list(random_config(rng, 2, count, bound).points)


def lifted(points: Sequence[ProjectivePoint]) -> list[ProjectivePoint]:
    return [veronese(q, 2) for q in points]
