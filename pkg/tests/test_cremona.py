from __future__ import annotations

import pytest

from gale_buddy.cremona import (
    CremonaWord,
    cr_apply,
    kernel_check,
    standard_cremona,
    transposition_word,
    word_for,
)
from gale_buddy.generators import generate_config
from gale_buddy.projective import PointConfiguration, equivalent, point
from gale_buddy.weyl import even_subsets, w_element, word_element


def test_standard_cremona():
    assert standard_cremona(point(2, 3, 5)) == point(15, 10, 6)
    assert standard_cremona(point(0, 1, 2)) == point(1, 0, 0)
    with pytest.raises(ValueError, match="indeterminacy_locus"):
        standard_cremona(point(1, 0, 0))


def test_word_parsing_and_inverse():
    word = CremonaWord.parse("s4 s0", 2, 5)
    assert word.letters == (4, 0)
    assert word.inverse().letters == (0, 4)
    assert str(word) == "s4 s0"
    with pytest.raises(ValueError, match="index_out_of_range"):
        CremonaWord.parse("s5", 2, 5)


def test_worked_example_under_both_normalizations(plane_frame):
    word = CremonaWord(2, 5, (4, 0))
    literal = cr_apply(word, plane_frame, normalization="coordinate")
    assert literal.points == plane_frame.points[:3] + (point(15, 10, 6), point(1, 1, 1))
    assert cr_apply(word, plane_frame) == plane_frame
    assert equivalent(literal, plane_frame)


def test_adjacent_letters_swap_points(plane_frame):
    swapped = cr_apply(CremonaWord(2, 5, (1,)), plane_frame)
    assert swapped.points[:2] == (point(0, 1, 0), point(1, 0, 0))
    assert not equivalent(swapped, plane_frame)


def test_cr_apply_needs_n_plus_3_points():
    config = PointConfiguration(2, (point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1)))
    with pytest.raises(ValueError, match="wrong_point_count"):
        cr_apply(CremonaWord(2, 4, (0,)), config)


def test_failed_step_is_reported():
    config = PointConfiguration(2, (point(1, 0, 0), point(0, 1, 0), point(1, 1, 0), point(1, 1, 1), point(2, 3, 5)))
    with pytest.raises(ValueError, match="step_failed step=1 letter=s0 general_position_failed"):
        cr_apply(CremonaWord(2, 5, (0,)), config)


def test_transposition_words():
    assert transposition_word(1, 3) == [1, 2, 1]
    assert transposition_word(2, 2) == []
    assert transposition_word(4, 3) == [3]


@pytest.mark.parametrize("n", [2, 3])
def test_words_realise_w_elements(n):
    for j in even_subsets(n):
        assert word_element(word_for(j, n).letters, n, n + 3) == w_element(j, n)


def test_word_for_single_pair():
    word = word_for({1, 2}, 2)
    assert len(word.letters) == 22
    assert word.letters[10:12] == (4, 0)


@pytest.mark.parametrize(("n", "seed"), [(2, 1), (3, 2), (4, 3)])
def test_kernel_elements_act_trivially(n, seed):
    config = generate_config(n, n + 3, seed=seed, bound=40)
    for j in even_subsets(n):
        assert kernel_check(j, config)


def test_kernel_check_needs_n_plus_3_points():
    with pytest.raises(ValueError, match="wrong_point_count"):
        kernel_check({1, 2}, generate_config(2, 6, seed=1, bound=20))


@pytest.mark.parametrize(("n", "seed"), [(2, 1), (3, 2)])
def test_word_followed_by_its_inverse_is_trivial(n, seed):
    config = generate_config(n, n + 3, seed=seed, bound=40)
    word = CremonaWord(n, n + 3, (0, n + 1, 1, 0, 2, n + 2, 0))
    assert equivalent(cr_apply(word + word.inverse(), config), config)
    assert equivalent(cr_apply(CremonaWord(n, n + 3, (0, 0)), config), config)


@pytest.mark.parametrize(("n", "seed"), [(2, 1), (3, 2)])
def test_cremona_action_respects_the_relations(n, seed):
    config = generate_config(n, n + 3, seed=seed, bound=40)

    def act(*letters: int):
        return cr_apply(CremonaWord(n, n + 3, letters), config)

    # s0 is joined to s_{n+1} and commutes with the other transpositions
    assert equivalent(act(0, n + 1, 0), act(n + 1, 0, n + 1))
    assert equivalent(act(0, 1), act(1, 0))
    assert equivalent(act(0, n + 2), act(n + 2, 0))
    assert equivalent(act(1, 2, 1), act(2, 1, 2))
