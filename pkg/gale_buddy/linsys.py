from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from .exact import (
    Matrix,
    Polynomial,
    RationalLike,
    interpolate,
    monomials,
    nullspace_basis,
    poly_gcd,
    resultant,
    rref,
    to_rational,
)
from .gale import associate
from .projective import PointConfiguration, ProjectivePoint, canonicalize
from .weyl import half_anticanonical, homaloidal_type

log = logging.getLogger("gale_buddy.linsys")


@dataclass(frozen=True, slots=True)
class BaseCondition:
    point: ProjectivePoint
    multiplicity: int = 1
    tangent_line: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity_invalid multiplicity={self.multiplicity}")
        if self.tangent_line is None:
            return
        line = tuple(to_rational(v) for v in self.tangent_line)
        object.__setattr__(self, "tangent_line", line)
        if self.point.ambient_dim != 2 or len(line) != 3:
            raise ValueError("tangent_line_requires_plane")
        if not any(line):
            raise ValueError("zero_vector")
        if sum(a * b for a, b in zip(line, self.point.coords)):
            raise ValueError(f"tangent_line_misses_point point={self.point}")


@dataclass(frozen=True, slots=True)
class HypersurfaceSystem:
    n: int
    degree: int
    conditions: tuple[BaseCondition, ...]
    basis: tuple[Polynomial, ...]
    rank: int
    condition_count: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def projective_dimension(self) -> int:
        return len(self.basis) - 1

    @property
    def monomial_count(self) -> int:
        return len(monomials(self.n + 1, self.degree))


def _monomial_partial_at(mono: tuple[int, ...], orders: tuple[int, ...], p: Sequence[int]) -> Fraction:
    if any(e < k for e, k in zip(mono, orders)):
        return Fraction(0)
    coeff = 1
    value = 1
    for c, e, k in zip(p, mono, orders):
        coeff *= prod(range(e - k + 1, e + 1))
        if e - k:
            value *= c ** (e - k)
    return Fraction(coeff * value)


def _line_direction(line: Sequence[Fraction], p: ProjectivePoint) -> tuple[Fraction, ...]:
    # a second point on the line, as a cross product with a coordinate vector
    a, b, c = line
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = (b * e[2] - c * e[1], c * e[0] - a * e[2], a * e[1] - b * e[0])
        if not any(v):
            continue
        x, y, z = p.coords
        if any((x * v[1] - y * v[0], x * v[2] - z * v[0], y * v[2] - z * v[1])):
            return v
    raise ValueError("tangent_line_degenerate")


def condition_rows(n: int, degree: int, condition: BaseCondition) -> list[list[Fraction]]:
    p = condition.point
    if p.ambient_dim != n:
        raise ValueError(f"dimension_mismatch n={n} point={p.ambient_dim}")
    monos = monomials(n + 1, degree)
    rows: list[list[Fraction]] = []
    if condition.multiplicity - 1 <= degree:
        for orders in monomials(n + 1, condition.multiplicity - 1):
            rows.append([_monomial_partial_at(mono, orders, p.coords) for mono in monos])
    else:
        rows.extend([Fraction(1) if k == j else Fraction(0) for k in range(len(monos))] for j in range(len(monos)))
    if condition.tangent_line is not None:
        if condition.multiplicity > 1:
            return rows
        direction = _line_direction(condition.tangent_line, p)
        grad_rows = []
        for i in range(n + 1):
            orders = tuple(int(k == i) for k in range(n + 1))
            grad_rows.append([_monomial_partial_at(mono, orders, p.coords) for mono in monos])
        rows.append([sum((direction[i] * grad_rows[i][j] for i in range(n + 1)), Fraction(0)) for j in range(len(monos))])
    return rows


def solve_system(n: int, degree: int, conditions: Iterable[BaseCondition]) -> HypersurfaceSystem:
    if degree < 1:
        raise ValueError(f"degree_too_low degree={degree}")
    conds = tuple(conditions)
    monos = monomials(n + 1, degree)
    rows: list[list[Fraction]] = []
    for cond in conds:
        rows.extend(condition_rows(n, degree, cond))
    matrix = Matrix.from_rows(rows, cols=len(monos))
    _, rank, _ = rref(matrix)
    null = nullspace_basis(matrix)
    reduced, r, _ = rref(null)
    basis = tuple(Polynomial.from_coefficients(n + 1, degree, reduced.row(i)) for i in range(r))
    log.debug("system_solved n=%d d=%d conditions=%d rank=%d dim=%d", n, degree, len(rows), rank, len(basis))
    return HypersurfaceSystem(n, degree, conds, basis, rank, len(rows))


def satisfies(poly: Polynomial, condition: BaseCondition) -> bool:
    """Exact check of every partial of order < multiplicity, plus tangency."""
    p = condition.point.coords
    for order in range(condition.multiplicity):
        for orders in monomials(poly.variables, order):
            if poly.partial(orders).evaluate(p):
                return False
    if condition.tangent_line is not None and condition.multiplicity == 1:
        direction = _line_direction(condition.tangent_line, condition.point)
        grad = [poly.derivative(i).evaluate(p) for i in range(poly.variables)]
        if sum(d * g for d, g in zip(direction, grad)):
            return False
    return True


def simple_conditions(points: Iterable[ProjectivePoint], multiplicity: int = 1) -> tuple[BaseCondition, ...]:
    return tuple(BaseCondition(p, multiplicity) for p in points)


def expected_dimension(n: int, m: int) -> int:
    return (n + 1) ** 2 - m * (n - 1)


def max_points(n: int) -> int:
    if n < 2:
        raise ValueError(f"degree_too_low n={n}")
    return (n + 1) ** 2 // (n - 1)


def plane_line(p: ProjectivePoint, q: ProjectivePoint) -> tuple[Fraction, ...]:
    (a, b, c), (d, e, f) = p.coords, q.coords
    line = (b * f - c * e, c * d - a * f, a * e - b * d)
    if not any(line):
        raise ValueError("points_not_distinct")
    return tuple(Fraction(v) for v in line)


def _coordinate_changes() -> Iterator[Matrix]:
    # unimodular: upper unitriangular times lower unitriangular, smallest shears first
    shears = sorted(product((0, 1, -1, 2), repeat=6), key=lambda t: (sum(abs(v) for v in t), t))
    for a, b, c, d, e, f in shears:
        upper = Matrix.from_rows([[1, a, b], [0, 1, c], [0, 0, 1]])
        lower = Matrix.from_rows([[1, 0, 0], [d, 1, 0], [e, f, 1]])
        yield upper @ lower


_MAX_COORDINATE_CHANGES = 256


def _ninth_in_chart(
    f: Polynomial, g: Polynomial, known: list[tuple[Fraction, ...]]
) -> tuple[Fraction, ...] | str:
    if not f.coefficient((0, 0, 3)) or not g.coefficient((0, 0, 3)):
        return "chart"
    if any(not q[1] for q in known):
        return "chart"
    ratios = [q[0] / q[1] for q in known]
    if len(set(ratios)) != len(ratios):
        return "chart"
    xs = list(range(10))
    values = [resultant(f.specialize([x, 1, None]), g.specialize([x, 1, None])) for x in xs]
    res = interpolate(xs, values)
    if res.is_zero():
        return "resultant_vanishes"
    residual = res
    for r in ratios:
        residual, rem = residual.divmod(Polynomial.univariate([-r, 1]))
        if not rem.is_zero():
            raise RuntimeError(f"known_root_missing x={r}")
    if residual.degree != 1:
        return "chart"
    c0, c1 = residual.dense()
    x9 = -c0 / c1
    if x9 in ratios:
        return "non_reduced_base_locus"
    common = poly_gcd(f.specialize([x9, 1, None]), g.specialize([x9, 1, None]))
    if common.degree != 1:
        return "chart"
    z0, z1 = common.dense()
    return (x9, Fraction(1), -z0 / z1)


def ninth_base_point(points: Sequence[ProjectivePoint]) -> ProjectivePoint:
    if len(points) != 8:
        raise ValueError(f"wrong_point_count m={len(points)} need=8")
    config = PointConfiguration(2, tuple(points))
    system = solve_system(2, 3, simple_conditions(config.points))
    if system.dimension != 2:
        raise ValueError(f"pencil_dimension dim={system.dimension}")
    f, g = system.basis

    failure = "chart"
    for attempt, change in enumerate(_coordinate_changes()):
        if attempt >= _MAX_COORDINATE_CHANGES:
            break
        back = change.inverse()
        known = [back.apply(p.vector()) for p in config.points]
        outcome = _ninth_in_chart(f.transform(change), g.transform(change), known)
        if isinstance(outcome, str):
            if outcome != "chart":
                failure = outcome
            if outcome == "resultant_vanishes":
                break
            continue
        q9 = canonicalize(change.apply(outcome))
        if f.evaluate(q9.coords) or g.evaluate(q9.coords):
            raise RuntimeError(f"ninth_point_check_failed point={q9}")
        if q9 in config.points:
            raise ValueError(f"non_reduced_base_locus point={q9}")
        log.debug("ninth_point point=%s attempt=%d", q9, attempt)
        return q9
    if failure == "chart":
        failure = "non_reduced_base_locus"
    raise ValueError(failure)


def quintic_witness(points: Sequence[ProjectivePoint]) -> HypersurfaceSystem:
    if len(points) != 9:
        raise ValueError(f"wrong_point_count m={len(points)} need=9")
    config = PointConfiguration(2, tuple(points))
    q9 = config.points[8]
    conds = [BaseCondition(q9, 3)]
    conds.extend(BaseCondition(q, 1, plane_line(q, q9)) for q in config.points[:8])
    return solve_system(2, 5, conds)


def associated_cubics(points: Sequence[ProjectivePoint]) -> HypersurfaceSystem:
    if len(points) != 9:
        raise ValueError(f"wrong_point_count m={len(points)} need=9")
    result = associate(PointConfiguration(5, tuple(points)))
    return solve_system(2, 3, simple_conditions(result.target.points))


def coble_sextic_witness(points: Sequence[ProjectivePoint]) -> Polynomial:
    system = associated_cubics(points)
    if system.dimension == 0:
        raise ValueError("no_elliptic_curve")
    if system.dimension >= 2:
        raise ValueError(f"pencil_on_weddle_locus dim={system.dimension}")
    return system.basis[0]


def weddle_membership(points: Sequence[ProjectivePoint], p: ProjectivePoint) -> bool:
    if len(points) != 8:
        raise ValueError(f"wrong_point_count m={len(points)} need=8")
    return associated_cubics([*points, p]).dimension >= 2


def homaloidal_system(subset: Iterable[int], config: PointConfiguration) -> HypersurfaceSystem:
    n = config.n
    if config.m != n + 3:
        raise ValueError(f"wrong_point_count m={config.m} need={n + 3}")
    degree, mults = homaloidal_type(subset, n)
    conds = [BaseCondition(p, k) for p, k in zip(config.points, mults) if k > 0]
    return solve_system(n, degree, conds)


def half_anticanonical_system(config: PointConfiguration) -> HypersurfaceSystem:
    n = config.n
    if config.m != n + 3:
        raise ValueError(f"wrong_point_count m={config.m} need={n + 3}")
    half = half_anticanonical(n)
    conds = [BaseCondition(p, k) for p, k in zip(config.points, half.multiplicities) if k > 0]
    return solve_system(n, half.degree, conds)


def parse_conditions(items: Sequence[dict], n: int) -> tuple[BaseCondition, ...]:
    out: list[BaseCondition] = []
    for item in items:
        raw: Sequence[RationalLike] = item["point"]
        p = canonicalize(raw)
        if p.ambient_dim != n:
            raise ValueError(f"dimension_mismatch n={n} point={p.ambient_dim}")
        tangent = item.get("tangent")
        out.append(
            BaseCondition(
                p,
                int(item.get("multiplicity", 1)),
                tuple(to_rational(v) for v in tangent) if tangent is not None else None,
            )
        )
    return tuple(out)
