from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import prod
from typing import Literal

from .exact import Matrix
from .projective import (
    PointConfiguration,
    ProjectiveMap,
    ProjectivePoint,
    canonicalize,
    equivalent,
    frame_transform,
)
from .weyl import default_pairing, parse_word

log = logging.getLogger("gale_buddy.cremona")

Normalization = Literal["frame", "coordinate"]


@dataclass(frozen=True, slots=True)
class CremonaWord:
    n: int
    m: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))
        for i in self.letters:
            if not 0 <= i <= self.m - 1:
                raise ValueError(f"index_out_of_range letter=s{i} m={self.m}")

    @classmethod
    def parse(cls, text: str, n: int, m: int) -> CremonaWord:
        return cls(n, m, tuple(parse_word(text)))

    def inverse(self) -> CremonaWord:
        return CremonaWord(self.n, self.m, self.letters[::-1])

    def __add__(self, other: CremonaWord) -> CremonaWord:
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("dimension_mismatch")
        return CremonaWord(self.n, self.m, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.letters)


def standard_cremona(p: ProjectivePoint) -> ProjectivePoint:
    zeros = sum(1 for c in p.coords if not c)
    if zeros >= 2:
        raise ValueError(f"indeterminacy_locus point={p}")
    coords = p.coords
    return canonicalize([prod(c for j, c in enumerate(coords) if j != i) for i in range(len(coords))])


def _coordinate_transform(config: PointConfiguration) -> ProjectiveMap:
    n = config.n
    basis = Matrix.from_columns([config.points[i].vector() for i in range(n + 1)])
    if basis.det() == 0:
        raise ValueError(f"general_position_failed subset={list(range(1, n + 2))}")
    return ProjectiveMap(basis.inverse())


def _apply_s0(config: PointConfiguration, normalization: Normalization) -> PointConfiguration:
    n = config.n
    if normalization == "frame":
        g = frame_transform(config)
    elif normalization == "coordinate":
        g = _coordinate_transform(config)
    else:
        raise ValueError(f"normalization_unknown name={normalization}")
    moved = g.apply(config).points
    head = tuple(canonicalize([int(k == i) for k in range(n + 1)]) for i in range(n + 1))
    tail = tuple(standard_cremona(p) for p in moved[n + 1 :])
    return PointConfiguration(n, head + tail)


def cr_apply(word: CremonaWord, config: PointConfiguration, normalization: Normalization = "frame") -> PointConfiguration:
    if (word.n, word.m) != (config.n, config.m):
        raise ValueError(f"dimension_mismatch word=({word.n},{word.m}) config=({config.n},{config.m})")
    if config.m < config.n + 3:
        raise ValueError(f"wrong_point_count m={config.m} need>={config.n + 3}")
    current = config
    for step, letter in enumerate(word.letters, start=1):
        try:
            if letter == 0:
                current = _apply_s0(current, normalization)
            else:
                current = current.swapped(letter - 1, letter)
        except ValueError as e:
            raise ValueError(f"step_failed step={step} letter=s{letter} {e}") from e
    return current


def transposition_word(i: int, j: int) -> list[int]:
    """Adjacent-swap palindrome for the transposition (i j)."""
    a, b = min(i, j), max(i, j)
    if a == b:
        return []
    up = list(range(a, b))
    return up + up[-2::-1]


def word_for(subset: Iterable[int], n: int, pairing: Sequence[tuple[int, int]] | None = None) -> CremonaWord:
    j_set = sorted(set(subset))
    if len(j_set) % 2:
        raise ValueError(f"even_subset_required size={len(j_set)}")
    m = n + 3
    if any(not 1 <= i <= m for i in j_set):
        raise ValueError(f"index_out_of_range subset={j_set} m={m}")
    letters: list[int] = []
    for a, b in pairing if pairing is not None else default_pairing(j_set):
        a, b = min(a, b), max(a, b)
        t_a = transposition_word(a, n + 2)
        t_b = transposition_word(b, n + 3)
        letters.extend(t_b + t_a + [n + 2, 0] + t_a + t_b)
    return CremonaWord(n, m, tuple(letters))


def kernel_check(subset: Iterable[int], config: PointConfiguration) -> bool:
    if config.m != config.n + 3:
        raise ValueError(f"wrong_point_count m={config.m} need={config.n + 3}")
    word = word_for(subset, config.n)
    result = equivalent(cr_apply(word, config), config)
    log.debug("kernel_check subset=%s letters=%d result=%s", sorted(set(subset)), len(word.letters), result)
    return result
