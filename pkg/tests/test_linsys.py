from __future__ import annotations

from fractions import Fraction

import pytest

from gale_buddy.exact import Polynomial
from gale_buddy.gale import rational_normal_points
from gale_buddy.generators import generate_config, lifted, pencil_base_points, plane_points, random_point, rng_for
from gale_buddy.linsys import (
    BaseCondition,
    associated_cubics,
    coble_sextic_witness,
    expected_dimension,
    half_anticanonical_system,
    homaloidal_system,
    max_points,
    ninth_base_point,
    parse_conditions,
    plane_line,
    quintic_witness,
    satisfies,
    simple_conditions,
    solve_system,
    weddle_membership,
)
from gale_buddy.projective import point


def test_conic_through_five_points():
    pts = [point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1), point(1, 2, 3)]
    system = solve_system(2, 2, simple_conditions(pts))
    assert system.dimension == 1
    assert system.monomial_count == 6
    assert system.rank == 5
    conic = system.basis[0]
    assert conic == Polynomial(3, {(1, 1, 0): 1, (1, 0, 1): Fraction(-4, 3), (0, 1, 1): Fraction(1, 3)})
    assert all(satisfies(conic, c) for c in system.conditions)


def test_double_point_imposes_three_conditions():
    system = solve_system(2, 3, [BaseCondition(point(1, 0, 0), 2)])
    assert system.condition_count == 3
    assert system.dimension == 7
    assert system.projective_dimension == 6


def test_multiplicity_above_degree_leaves_nothing():
    assert solve_system(2, 3, [BaseCondition(point(1, 2, 3), 5)]).dimension == 0


def test_tangency_condition():
    p = point(1, 0, 0)
    xz_minus_y2 = Polynomial(3, {(1, 0, 1): 1, (0, 2, 0): -1})
    assert satisfies(xz_minus_y2, BaseCondition(p, 1, (0, 0, 1)))
    assert not satisfies(xz_minus_y2, BaseCondition(p, 1, (0, 1, 0)))
    system = solve_system(2, 2, [BaseCondition(p, 1, (0, 0, 1))])
    assert system.dimension == 4
    assert all(satisfies(q, c) for q in system.basis for c in system.conditions)


def test_tangent_line_must_pass_through_point():
    with pytest.raises(ValueError, match="tangent_line_misses_point"):
        BaseCondition(point(1, 0, 0), 1, (1, 0, 0))


def test_dimension_counts():
    assert expected_dimension(3, 8) == 0
    assert max_points(3) == 8
    assert max_points(5) == 9
    with pytest.raises(ValueError):
        max_points(1)


def test_plane_line():
    line = plane_line(point(1, 0, 0), point(0, 1, 0))
    assert line == (0, 0, 1)


def test_ninth_point_of_a_grid(grid_points):
    assert ninth_base_point(grid_points[:8]) == point(1, 3, 1)


def test_ninth_point_of_random_pencils():
    rng = rng_for(3)
    for _ in range(3):
        pts = pencil_base_points(rng, 20)
        system = solve_system(2, 3, simple_conditions(pts[:8]))
        assert all(not f.evaluate(pts[8].coords) for f in system.basis)


def test_ninth_point_rejects_conic():
    on_conic = rational_normal_points([0, 1, 2, 3, 4, 5, 6, None], 2).points
    with pytest.raises(ValueError, match="pencil_dimension dim=3"):
        ninth_base_point(on_conic)


def test_ninth_point_rejects_four_collinear():
    # the first four lie on x + y = z, so every cubic of the pencil contains that line
    pts = [point(1, 1, 2), point(1, 2, 3), point(2, 1, 3), point(1, 3, 4)]
    pts += [point(3, 1, 1), point(1, 4, 1), point(2, 5, 1), point(5, 2, 1)]
    with pytest.raises(ValueError, match="resultant_vanishes"):
        ninth_base_point(pts)


def test_quintic_witness_separates_pencils_from_random_points():
    rng = rng_for(5)
    on_pencil = quintic_witness(pencil_base_points(rng, 20))
    assert on_pencil.dimension == 1
    assert all(satisfies(on_pencil.basis[0], c) for c in on_pencil.conditions)
    assert quintic_witness(plane_points(rng, 9, 20)).dimension == 0


def test_weddle_locus_contains_lifted_base_points():
    rng = rng_for(9)
    lifted_pts = lifted(pencil_base_points(rng, 20))
    assert weddle_membership(lifted_pts[:8], lifted_pts[8])
    assert not weddle_membership(lifted_pts[:8], random_point(rng, 5, 20))


def test_coble_witness_for_lifted_points():
    pts = lifted(plane_points(rng_for(4), 9, 20))
    cubic = coble_sextic_witness(pts)
    assert cubic.degree == 3
    assert associated_cubics(pts).dimension == 1


def test_homaloidal_systems_have_n_plus_one_sections():
    assert homaloidal_system({1, 2}, generate_config(2, 5, seed=1, bound=20)).dimension == 3
    assert homaloidal_system({1, 2}, generate_config(3, 6, seed=1, bound=20)).dimension == 4


@pytest.mark.parametrize("n", [3, 5])
def test_half_anticanonical_dimension(n):
    config = generate_config(n, n + 3, seed=2, bound=20)
    assert half_anticanonical_system(config).dimension == 2 ** ((n + 1) // 2)


@pytest.mark.slow
def test_half_anticanonical_dimension_seven():
    config = generate_config(7, 10, seed=2, bound=20)
    assert half_anticanonical_system(config).dimension == 16


def test_parse_conditions():
    conds = parse_conditions(
        [{"point": [2, 0, 0]}, {"point": ["1/2", 0, 0], "multiplicity": 2}, {"point": [0, 1, 0], "tangent": [0, 0, 1]}],
        2,
    )
    assert conds[0].point == point(1, 0, 0)
    assert conds[1].multiplicity == 2
    assert conds[2].tangent_line == (0, 0, 1)
    with pytest.raises(ValueError, match="dimension_mismatch"):
        parse_conditions([{"point": [1, 0]}], 2)
