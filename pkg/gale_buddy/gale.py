from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from .exact import Matrix, RationalLike, nullspace_basis, rref, to_rational
from .projective import PointConfiguration, ProjectivePoint, canonicalize, equivalent

log = logging.getLogger("gale_buddy.gale")


@dataclass(frozen=True, slots=True)
class AssociationResult:
    source: PointConfiguration
    target: PointConfiguration
    certificate: Matrix


def associate(config: PointConfiguration, basis: Matrix | None = None) -> AssociationResult:
    n, m = config.n, config.m
    if m < n + 3:
        raise ValueError(f"wrong_point_count m={m} need>={n + 3}")
    a = config.coordinate_matrix()
    _, rank, _ = rref(a)
    if rank < n + 1:
        raise ValueError(f"points_do_not_span rank={rank}")

    if basis is None:
        b = nullspace_basis(a)
    else:
        b = basis
        if b.cols != m or b.rows != m - n - 1 or b.rank() != b.rows:
            raise ValueError(f"dimension_mismatch basis={b.rows}x{b.cols}")
        if not (a @ b.transpose()).is_zero():
            raise ValueError("basis_not_in_nullspace")

    points: list[ProjectivePoint] = []
    for j in range(m):
        col = b.column(j)
        if not any(col):
            raise ValueError(f"point_in_special_position index={j + 1}")
        points.append(canonicalize(col))
    target = PointConfiguration(m - n - 2, tuple(points))
    log.debug("associated n=%d m=%d target_dim=%d", n, m, target.n)
    return AssociationResult(source=config, target=target, certificate=b)


def is_self_associated(config: PointConfiguration) -> bool:
    if config.m != 2 * config.n + 2:
        raise ValueError(f"wrong_point_count m={config.m} need={2 * config.n + 2}")
    return equivalent(config, associate(config).target)


def rational_normal_points(params: Sequence[RationalLike | None], n: int) -> PointConfiguration:
    """Points (1, t, ..., t^n); None stands for the point at infinity."""
    pts: list[ProjectivePoint] = []
    for t in params:
        if t is None:
            pts.append(canonicalize([0] * n + [1]))
            continue
        q = to_rational(t)
        pts.append(canonicalize([q**k for k in range(n + 1)]))
    return PointConfiguration(n, tuple(pts))

