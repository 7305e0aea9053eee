from __future__ import annotations

import pytest

from gale_buddy.generators import (
    generate_config,
    lifted,
    pencil_base_points,
    random_config,
    random_invertible_map,
    random_params,
    random_permutation,
    random_point,
    rng_for,
)
from gale_buddy.linsys import simple_conditions, solve_system
from gale_buddy.projective import frame_transform, point


def test_generation_is_reproducible():
    assert generate_config(2, 6, seed=7, bound=50) == generate_config(2, 6, seed=7, bound=50)
    assert generate_config(2, 6, seed=7, bound=50) != generate_config(2, 6, seed=8, bound=50)


def test_streams_are_independent():
    a = random_config(rng_for(7, 1), 3, 7, 20)
    b = random_config(rng_for(7, 2), 3, 7, 20)
    assert a != b


def test_random_configs_admit_a_frame():
    config = generate_config(4, 8, seed=3, bound=10)
    assert config.m == 8
    frame_transform(config)


def test_random_params_are_distinct():
    params = random_params(rng_for(1), 8, 5)
    assert len(set(params)) == 8
    assert params == sorted(params)
    with pytest.raises(ValueError, match="generator_exhausted"):
        random_params(rng_for(1), 4, 1)


def test_bound_must_be_positive():
    with pytest.raises(ValueError, match="generator_exhausted"):
        random_point(rng_for(1), 2, 0)


def test_random_invertible_map_and_permutation():
    rng = rng_for(2)
    assert random_invertible_map(rng, 3, 5).is_invertible()
    assert sorted(random_permutation(rng, 6)) == list(range(6))


def test_pencil_base_points_close_the_pencil():
    pts = pencil_base_points(rng_for(21), 30)
    assert len(pts) == 9
    system = solve_system(2, 3, simple_conditions(pts[:8]))
    assert system.dimension == 2
    assert all(not f.evaluate(pts[8].coords) for f in system.basis)


def test_lifted_points_sit_on_the_veronese_surface():
    assert lifted([point(1, 2, 3)]) == [point(1, 2, 3, 4, 6, 9)]
