from __future__ import annotations

from fractions import Fraction

import pytest

from gale_buddy.exact import Matrix
from gale_buddy.gale import rational_normal_points
from gale_buddy.generators import random_invertible_map, random_params, rng_for
from gale_buddy.projective import (
    PointConfiguration,
    ProjectiveMap,
    ProjectivePoint,
    cross_ratio,
    equivalent,
    frame_transform,
    general_position,
    map_from_rows,
    normalize_to_frame,
    point,
    veronese,
)


def test_points_are_canonical():
    assert point(2, 4) == point(1, 2)
    assert point(-1, 2).coords == (1, -2)
    assert point("1/2", "1/3").coords == (3, 2)
    with pytest.raises(ValueError, match="not_canonical"):
        ProjectivePoint((2, 4))
    with pytest.raises(ValueError, match="zero_vector"):
        point(0, 0, 0)


def test_configuration_rejects_repeats():
    with pytest.raises(ValueError, match="points_not_distinct i=1 j=2"):
        PointConfiguration(1, (point(1, 2), point(2, 4)))


def test_configuration_rejects_mixed_dimensions():
    with pytest.raises(ValueError, match="dimension_mismatch"):
        PointConfiguration(2, (point(1, 0, 0), point(1, 1)))


def test_frame_transform_on_the_line():
    config = PointConfiguration(1, (point(1, 0), point(0, 1), point(1, 2)))
    g = frame_transform(config)
    assert g.matrix == Matrix.diagonal([2, 1])
    assert normalize_to_frame(config).points == (point(1, 0), point(0, 1), point(1, 1))


def test_frame_transform_reports_failing_subset():
    config = PointConfiguration(2, (point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 0)))
    with pytest.raises(ValueError, match=r"general_position_failed subset=\[1, 2, 4\]"):
        frame_transform(config)


def test_general_position():
    collinear = [point(1, 0, 0), point(0, 1, 0), point(1, 1, 0), point(0, 0, 1)]
    assert general_position(collinear) == (1, 2, 3)
    assert general_position([point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1)]) is None


def test_equivalence_under_linear_change(plane_frame):
    g = map_from_rows([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    assert g.is_invertible()
    moved = g.apply(plane_frame)
    assert equivalent(moved, plane_frame)
    assert not equivalent(plane_frame.swapped(0, 1), plane_frame)


def test_map_kernel_raises():
    g = ProjectiveMap(Matrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(ValueError, match="point_in_kernel"):
        g(point(0, 1))


def test_cross_ratio_convention_and_invariance():
    pts = [point(1, 0), point(0, 1), point(1, 1), point(1, 2)]
    assert cross_ratio(pts) == Fraction(2)
    g = map_from_rows([[2, 1], [1, 3]])
    assert cross_ratio([g(p) for p in pts]) == Fraction(2)


def test_veronese_uses_graded_lex_monomials():
    assert veronese(point(1, 2), 2) == point(1, 2, 4)
    assert veronese(point(1, 2, 3), 2).coords == (1, 2, 3, 4, 6, 9)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_equivalence_is_an_equivalence_relation(seed):
    rng = rng_for(seed)
    a = rational_normal_points(random_params(rng, 7, 30), 2)
    g = random_invertible_map(rng, 2, 10)
    h = random_invertible_map(rng, 2, 10)
    b = g.apply(a)
    c = h.apply(b)
    assert c == h.compose(g).apply(a)
    assert equivalent(a, a)
    assert equivalent(a, b) and equivalent(b, a)
    assert equivalent(b, c) and equivalent(a, c)
    assert not equivalent(a, a.swapped(4, 5))


def test_double_transposition_keeps_four_points_equivalent():
    a = rational_normal_points([0, None, 1, 2], 1)
    b = rational_normal_points([1, 2, 0, None], 1)
    assert equivalent(a, b)
    assert cross_ratio(a.points) == cross_ratio(b.points) == Fraction(2)
    assert not equivalent(a, rational_normal_points([0, None, 1, 3], 1))
