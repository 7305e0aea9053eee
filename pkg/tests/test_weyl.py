from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from gale_buddy.weyl import (
    DivisorClass,
    PairingForm,
    WeylElement,
    anticanonical,
    apply,
    curve_pairing,
    d_class,
    hyperplane_image,
    even_subsets,
    generator,
    half_anticanonical,
    homaloidal_type,
    odd_subsets,
    parse_word,
    permutation_element,
    w_element,
    w_image_closed_form,
    word_element,
)


def e(i: int, n: int) -> DivisorClass:
    return DivisorClass.basis(i, n, n + 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generators_are_involutions_fixing_the_form(n):
    m = n + 3
    minus_k = anticanonical(n, m)
    for i in range(m):
        s = generator(i, n, m)
        assert s.preserves_form()
        assert (s @ s).is_identity()
        assert apply(s, minus_k) == minus_k


def test_s0_is_the_standard_transformation():
    assert apply(generator(0, 2, 5), e(0, 2)).coeffs == (2, -1, -1, -1, 0, 0)
    assert apply(generator(0, 2, 5), e(1, 2)).coeffs == (1, 0, -1, -1, 0, 0)
    assert str(apply(generator(0, 3, 6), e(0, 3))) == "(3; 2,2,2,2,0,0)"


def test_words_apply_left_to_right():
    # [1, 2] is s2 after s1
    assert apply(word_element([1, 2], 2, 5), e(1, 2)) == e(3, 2)
    assert apply(word_element([2, 1], 2, 5), e(1, 2)) == e(2, 2)


def test_parse_word():
    assert parse_word("s0 s3, S2") == [0, 3, 2]
    with pytest.raises(ValueError, match="bad_word_letter"):
        parse_word("s0 x1")


def test_pairing_form_gram():
    form = PairingForm(3, 6)
    assert form.gram()[0, 0] == 2
    assert form.pair(e(1, 3), e(1, 3)) == -1
    assert form.pair(anticanonical(3, 6), anticanonical(3, 6)) == 2 * 16 - 6 * 4


def test_weyl_matrix_is_read_only():
    w = WeylElement.identity(2, 5)
    with pytest.raises(ValueError):
        w.matrix[0, 0] = 3
    assert hash(w) == hash(WeylElement(2, 5, np.eye(6, dtype=np.int64)))


def test_permutation_element_moves_exceptional_classes():
    p = permutation_element({1: 3, 3: 1}, 2, 5)
    assert apply(p, e(1, 2)) == e(3, 2)
    assert apply(p, e(0, 2)) == e(0, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_anticanonical_curve_pairing_is_four(n):
    assert curve_pairing(anticanonical(n, n + 3)) == 4


def test_half_anticanonical():
    assert half_anticanonical(3).coeffs == (2,) + (-1,) * 6
    assert half_anticanonical(5).coeffs == (3,) + (-2,) * 8
    with pytest.raises(ValueError, match="odd_dimension_required"):
        half_anticanonical(4)


def test_d_class_of_a_singleton_is_the_exceptional_class():
    assert d_class({2}, 3) == e(2, 3)
    assert d_class({1, 2, 3}, 3).coeffs == (1, 0, 0, 0, -1, -1, -1)
    with pytest.raises(ValueError, match="odd_subset_required"):
        d_class({1, 2}, 3)


def test_subset_counts():
    assert len(list(even_subsets(2))) == 16
    assert len(list(odd_subsets(3))) == 32


@pytest.mark.parametrize("n", [2, 3])
def test_w_acts_by_symmetric_difference(n):
    for j, i in product(even_subsets(n), odd_subsets(n)):
        assert apply(w_element(j, n), d_class(i, n)) == d_class(i ^ j, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_w_group_law(n):
    evens = list(even_subsets(n))
    elements = {j: w_element(j, n) for j in evens}
    assert elements[frozenset()].is_identity()
    for a, b in product(evens, evens):
        assert elements[a] @ elements[b] == elements[a ^ b]


def test_w_image_of_the_hyperplane_class():
    image = apply(w_element({1, 2}, 2), e(0, 2))
    assert image == hyperplane_image({1, 2}, 2)
    assert image.coeffs == (2, 0, 0, -1, -1, -1)
    assert homaloidal_type({1, 2}, 2) == (2, (0, 0, 1, 1, 1))
    assert homaloidal_type({1, 2}, 3) == (3, (0, 0, 2, 2, 2, 2))


def test_w_image_closed_form_on_exceptional_classes():
    n = 4
    for j in even_subsets(n):
        w = w_element(j, n)
        for s in range(1, n + 4):
            assert apply(w, e(s, n)) == w_image_closed_form(j, s, n)


def test_w_does_not_depend_on_the_pairing():
    j = {1, 2, 4, 6}
    assert w_element(j, 3, [(1, 4), (2, 6)]) == w_element(j, 3)
    with pytest.raises(ValueError, match="pairing_invalid"):
        w_element(j, 3, [(1, 2), (2, 4)])
    with pytest.raises(ValueError, match="even_subset_required"):
        w_element({1, 2, 3}, 3)
