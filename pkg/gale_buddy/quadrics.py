from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .exact import Matrix, Polynomial, RationalLike, resultant, rref, to_rational
from .projective import PointConfiguration, ProjectivePoint, canonicalize, veronese_row

log = logging.getLogger("gale_buddy.quadrics")

HEAD = 5


@dataclass(frozen=True, slots=True)
class HyperplaneArrangement:
    rows: Matrix

    def __post_init__(self) -> None:
        if self.rows.cols != HEAD or self.rows.rows < HEAD:
            raise ValueError(f"dimension_mismatch shape={self.rows.rows}x{self.rows.cols}")
        for i in range(self.rows.rows):
            if not any(self.rows.row(i)):
                raise ValueError(f"zero_vector row={i}")

    @property
    def n(self) -> int:
        return self.rows.rows - 3

    def is_normalized(self) -> bool:
        top = Matrix.from_rows([self.rows.row(i) for i in range(HEAD)])
        return top == Matrix.identity(HEAD)

    def tail(self) -> list[tuple[Fraction, ...]]:
        return [self.rows.row(i) for i in range(HEAD, self.rows.rows)]


@dataclass(frozen=True, slots=True)
class QuadricModel:
    n: int
    arrangement: HyperplaneArrangement
    quadrics: tuple[Polynomial, ...]
    points: tuple[ProjectivePoint, ...] | None = None

    @property
    def variables(self) -> int:
        return self.n + 3


def hyperplanes_from_points(points: Sequence[ProjectivePoint]) -> HyperplaneArrangement:
    if len(points) < HEAD:
        raise ValueError(f"wrong_point_count m={len(points)} need>={HEAD}")
    config = PointConfiguration(1, tuple(points))
    return HyperplaneArrangement(Matrix.from_rows([veronese_row(q, 4) for q in config.points]))


def normalize_arrangement(arr: HyperplaneArrangement) -> HyperplaneArrangement:
    top = Matrix.from_rows([arr.rows.row(i) for i in range(HEAD)])
    try:
        inv = top.inverse()
    except ValueError:
        raise ValueError("singular_block") from None
    return HyperplaneArrangement(arr.rows @ inv)


def _diagonal_quadric(i: int, a: Sequence[Fraction], variables: int) -> Polynomial:
    terms: dict[tuple[int, ...], Fraction] = {}
    terms[tuple(2 if k == i else 0 for k in range(variables))] = Fraction(1)
    for s, coeff in enumerate(a):
        if coeff:
            terms[tuple(2 if k == s else 0 for k in range(variables))] = -coeff
    return Polynomial(variables, terms)


def build_model_from_arrangement(
    arr: HyperplaneArrangement, points: Sequence[ProjectivePoint] | None = None
) -> QuadricModel:
    normalized = normalize_arrangement(arr)
    n = normalized.n
    quadrics = tuple(_diagonal_quadric(HEAD + k, a, n + 3) for k, a in enumerate(normalized.tail()))
    log.debug("model_built n=%d quadrics=%d", n, len(quadrics))
    return QuadricModel(n, normalized, quadrics, tuple(points) if points is not None else None)


def build_model(points: Sequence[ProjectivePoint]) -> QuadricModel:
    return build_model_from_arrangement(hyperplanes_from_points(points), points)


def _check_point(model: QuadricModel, y: ProjectivePoint) -> None:
    if len(y.coords) != model.variables:
        raise ValueError(f"dimension_mismatch variables={model.variables} point={len(y.coords)}")


def membership(model: QuadricModel, y: ProjectivePoint) -> bool:
    _check_point(model, y)
    return all(not q.evaluate(y.coords) for q in model.quadrics)


def _require_member(model: QuadricModel, y: ProjectivePoint) -> None:
    if not membership(model, y):
        raise ValueError(f"not_a_member point={y}")


def sign_orbit(model: QuadricModel, y: ProjectivePoint) -> list[ProjectivePoint]:
    _require_member(model, y)
    zeros = sum(1 for c in y.coords if not c)
    if zeros:
        size = 2 ** (model.variables - 1 - zeros)
        raise ValueError(f"branch_locus zeros={zeros} orbit={size}")
    out: list[ProjectivePoint] = []
    for signs in product((1, -1), repeat=model.variables - 1):
        out.append(canonicalize([y.coords[0], *(s * c for s, c in zip(signs, y.coords[1:]))]))
    return out


def cover_image(model: QuadricModel, y: ProjectivePoint) -> ProjectivePoint:
    _require_member(model, y)
    t = [Fraction(c * c) for c in y.coords[:HEAD]]
    for i, a in enumerate(model.arrangement.tail(), start=HEAD):
        if sum(coeff * ts for coeff, ts in zip(a, t)) != y.coords[i] ** 2:
            raise RuntimeError(f"cover_image_inconsistent index={i}")
    return canonicalize(t)


def jacobian(model: QuadricModel, y: ProjectivePoint) -> Matrix:
    _check_point(model, y)
    rows = []
    for q in model.quadrics:
        rows.append([q.derivative(j).evaluate(y.coords) for j in range(model.variables)])
    return Matrix.from_rows(rows, cols=model.variables)


def is_smooth_at(model: QuadricModel, y: ProjectivePoint) -> bool:
    _require_member(model, y)
    _, rank, _ = rref(jacobian(model, y))
    return rank == len(model.quadrics)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def lift_member(model: QuadricModel, head: Sequence[RationalLike]) -> ProjectivePoint:
    if len(head) != HEAD:
        raise ValueError(f"dimension_mismatch head={len(head)} need={HEAD}")
    y = [to_rational(v) for v in head]
    t = [v * v for v in y]
    for i, a in enumerate(model.arrangement.tail(), start=HEAD):
        root = _rational_sqrt(sum((coeff * ts for coeff, ts in zip(a, t)), Fraction(0)))
        if root is None:
            raise ValueError(f"not_a_square index={i}")
        y.append(root)
    return canonicalize(y)


def branch_quartic(model: QuadricModel, y: ProjectivePoint) -> Polynomial:
    if model.points is None:
        raise ValueError("model_without_points")
    t = cover_image(model, y)
    raw = Matrix.from_rows([veronese_row(q, 4) for q in model.points[:HEAD]])
    coeffs = raw.inverse().apply(t.vector())
    return Polynomial.from_coefficients(2, 4, coeffs)


def discriminant(quartic: Polynomial) -> Fraction:
    """Discriminant of a binary form, via the resultant of a chart and its derivative."""
    if quartic.variables != 2 or not quartic.is_homogeneous() or quartic.degree < 2:
        raise ValueError(f"degree_too_low degree={quartic.degree}")
    d = quartic.degree
    form = quartic
    # z -> z + kx keeps the discriminant and moves a non-root to (1:0)
    for k in range(d + 1):
        if quartic.evaluate((1, k)):
            form = quartic.transform(Matrix.from_rows([[1, 0], [k, 1]]))
            break
    f = form.specialize([None, 1])
    lead = f.leading_coefficient()
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / lead


def in_open_locus(model: QuadricModel, y: ProjectivePoint) -> bool:
    if not membership(model, y):
        return False
    if any(not c for c in y.coords):
        return False
    return discriminant(branch_quartic(model, y)) != 0
