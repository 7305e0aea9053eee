from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .exact import Matrix, RationalLike, monomials, primitive_integers, to_rational


@dataclass(frozen=True, slots=True)
class ProjectivePoint:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.coords):
            raise ValueError("zero_vector")
        first = next(c for c in self.coords if c)
        if first < 0 or gcd(*self.coords) != 1:
            raise ValueError(f"not_canonical coords={self.coords}")

    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def canonicalize(raw: Sequence[RationalLike]) -> ProjectivePoint:
    return ProjectivePoint(primitive_integers(raw))


def point(*coords: RationalLike) -> ProjectivePoint:
    return canonicalize(coords)


@dataclass(frozen=True, slots=True)
class PointConfiguration:
    n: int
    points: tuple[ProjectivePoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        for i, p in enumerate(self.points):
            if p.ambient_dim != self.n:
                raise ValueError(f"dimension_mismatch n={self.n} point={i + 1} dim={p.ambient_dim}")
        seen: dict[ProjectivePoint, int] = {}
        for i, p in enumerate(self.points):
            if p in seen:
                raise ValueError(f"points_not_distinct i={seen[p] + 1} j={i + 1}")
            seen[p] = i

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[RationalLike]], n: int | None = None) -> PointConfiguration:
        pts = tuple(canonicalize(v) for v in vectors)
        dim = n if n is not None else (pts[0].ambient_dim if pts else 0)
        return cls(dim, pts)

    @property
    def m(self) -> int:
        return len(self.points)

    def coordinate_matrix(self) -> Matrix:
        return Matrix.from_columns([p.vector() for p in self.points], rows=self.n + 1)

    def permuted(self, order: Sequence[int]) -> PointConfiguration:
        """order[k] is the 0-based index of the point placed at position k."""
        if sorted(order) != list(range(self.m)):
            raise ValueError(f"index_out_of_range order={list(order)}")
        return PointConfiguration(self.n, tuple(self.points[k] for k in order))

    def swapped(self, i: int, j: int) -> PointConfiguration:
        order = list(range(self.m))
        order[i], order[j] = order[j], order[i]
        return self.permuted(order)

    def __str__(self) -> str:
        return f"P^{self.n}[" + ", ".join(str(p) for p in self.points) + "]"


@dataclass(frozen=True, slots=True)
class ProjectiveMap:
    matrix: Matrix

    @property
    def source_dim(self) -> int:
        return self.matrix.cols - 1

    @property
    def target_dim(self) -> int:
        return self.matrix.rows - 1

    def is_invertible(self) -> bool:
        return self.matrix.rows == self.matrix.cols and self.matrix.det() != 0

    def __call__(self, p: ProjectivePoint) -> ProjectivePoint:
        image = self.matrix.apply(p.vector())
        if not any(image):
            raise ValueError(f"point_in_kernel point={p}")
        return canonicalize(image)

    def apply(self, config: PointConfiguration) -> PointConfiguration:
        if config.n != self.source_dim:
            raise ValueError(f"dimension_mismatch n={config.n} source={self.source_dim}")
        return PointConfiguration(self.target_dim, tuple(self(p) for p in config.points))

    def compose(self, inner: ProjectiveMap) -> ProjectiveMap:
        return ProjectiveMap(self.matrix @ inner.matrix)

    def inverse(self) -> ProjectiveMap:
        return ProjectiveMap(self.matrix.inverse())


def _primitive_matrix(m: Matrix) -> Matrix:
    scaled = primitive_integers(m.entries)
    return Matrix(m.rows, m.cols, tuple(Fraction(v) for v in scaled))


def general_position(points: Sequence[ProjectivePoint]) -> tuple[int, ...] | None:
    """First (n+1)-subset (1-based) that fails to span, or None."""
    if not points:
        return None
    n = points[0].ambient_dim
    for subset in combinations(range(len(points)), n + 1):
        cols = Matrix.from_columns([points[i].vector() for i in subset])
        if cols.det() == 0:
            return tuple(i + 1 for i in subset)
    return None


def frame_transform(config: PointConfiguration) -> ProjectiveMap:
    n = config.n
    if config.m < n + 2:
        raise ValueError(f"wrong_point_count m={config.m} need={n + 2}")
    basis = Matrix.from_columns([config.points[i].vector() for i in range(n + 1)])
    if basis.det() == 0:
        raise ValueError(f"general_position_failed subset={list(range(1, n + 2))}")
    unit = config.points[n + 1].vector()
    weights = basis.inverse().apply(unit)
    for i, w in enumerate(weights):
        if not w:
            subset = [k + 1 for k in range(n + 2) if k != i]
            raise ValueError(f"general_position_failed subset={subset}")
    scaled = Matrix.from_columns([tuple(w * c for c in basis.column(j)) for j, w in enumerate(weights)])
    return ProjectiveMap(_primitive_matrix(scaled.inverse()))


def normalize_to_frame(config: PointConfiguration) -> PointConfiguration:
    return frame_transform(config).apply(config)


def equivalent(a: PointConfiguration, b: PointConfiguration) -> bool:
    if a.n != b.n or a.m != b.m:
        raise ValueError(f"dimension_mismatch a=P^{a.n}x{a.m} b=P^{b.n}x{b.m}")
    return normalize_to_frame(a).points == normalize_to_frame(b).points


def _bracket(p: ProjectivePoint, q: ProjectivePoint) -> int:
    return p.coords[0] * q.coords[1] - p.coords[1] * q.coords[0]


def cross_ratio(points: Sequence[ProjectivePoint]) -> Fraction:
    if len(points) != 4 or any(p.ambient_dim != 1 for p in points):
        raise ValueError("wrong_point_count need=4 on P^1")
    p1, p2, p3, p4 = points
    num = _bracket(p1, p4) * _bracket(p2, p3)
    den = _bracket(p1, p3) * _bracket(p2, p4)
    if not num or not den:
        raise ValueError("points_not_distinct")
    return Fraction(num, den)


def veronese(p: ProjectivePoint, degree: int) -> ProjectivePoint:
    if degree < 1:
        raise ValueError(f"degree_too_low degree={degree}")
    return canonicalize(veronese_row(p, degree))


def veronese_row(p: ProjectivePoint, degree: int) -> tuple[int, ...]:
    """All degree-d monomials at p, graded-lex, without rescaling."""
    return tuple(
        prod((c**e for c, e in zip(p.coords, mono) if e), start=1)
        for mono in monomials(len(p.coords), degree)
    )


def map_from_rows(rows: Sequence[Sequence[RationalLike]]) -> ProjectiveMap:
    return ProjectiveMap(Matrix.from_rows([[to_rational(v) for v in r] for r in rows]))
