from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

Subset = frozenset[int]


@dataclass(frozen=True, slots=True)
class DivisorClass:
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("dimension_mismatch coeffs=0")

    @classmethod
    def basis(cls, i: int, n: int, m: int) -> DivisorClass:
        if not 0 <= i <= m:
            raise ValueError(f"index_out_of_range i={i} m={m}")
        return cls(n, tuple(int(k == i) for k in range(m + 1)))

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return self.coeffs[0]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(-c for c in self.coeffs[1:])

    def _check(self, other: DivisorClass) -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError(f"dimension_mismatch left=({self.n},{self.m}) right=({other.n},{other.m})")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(self.n, tuple(k * c for c in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.degree}; " + ",".join(str(v) for v in self.multiplicities) + ")"


@dataclass(frozen=True, slots=True)
class PairingForm:
    n: int
    m: int

    def gram(self) -> np.ndarray:
        return np.diag([self.n - 1] + [-1] * self.m).astype(np.int64)

    def pair(self, x: DivisorClass, y: DivisorClass) -> int:
        g = self.gram()
        return int(np.asarray(x.coeffs, dtype=np.int64) @ g @ np.asarray(y.coeffs, dtype=np.int64))


@dataclass(frozen=True, slots=True, eq=False)
class WeylElement:
    n: int
    m: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.int64)
        if mat.shape != (self.m + 1, self.m + 1):
            raise ValueError(f"dimension_mismatch shape={mat.shape} m={self.m}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def identity(cls, n: int, m: int) -> WeylElement:
        return cls(n, m, np.eye(m + 1, dtype=np.int64))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.n == other.n and self.m == other.m and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.matrix.tobytes()))

    def __matmul__(self, other: WeylElement) -> WeylElement:
        """self after other."""
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(f"dimension_mismatch left=({self.n},{self.m}) right=({other.n},{other.m})")
        return WeylElement(self.n, self.m, self.matrix @ other.matrix)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.m + 1, dtype=np.int64)))

    def preserves_form(self) -> bool:
        g = PairingForm(self.n, self.m).gram()
        return bool(np.array_equal(self.matrix.T @ g @ self.matrix, g))

    def to_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.matrix]


@dataclass(frozen=True, slots=True)
class CurveFunctional:
    n: int
    m: int

    def values(self) -> tuple[int, ...]:
        return (self.n + 1,) + (1,) * self.m

    def __call__(self, c: DivisorClass) -> int:
        if c.m != self.m:
            raise ValueError(f"dimension_mismatch m={self.m} class_m={c.m}")
        return sum(v * k for v, k in zip(self.values(), c.coeffs))


def _reflection(alpha: np.ndarray, n: int, m: int) -> WeylElement:
    g = PairingForm(n, m).gram()
    return WeylElement(n, m, np.eye(m + 1, dtype=np.int64) + np.outer(alpha, g @ alpha))


def simple_root(i: int, n: int, m: int) -> np.ndarray:
    if m < n + 2:
        raise ValueError(f"wrong_point_count m={m} need>={n + 2}")
    if not 0 <= i <= m - 1:
        raise ValueError(f"index_out_of_range i={i} m={m}")
    alpha = np.zeros(m + 1, dtype=np.int64)
    if i == 0:
        alpha[0] = 1
        alpha[1 : n + 2] = -1
    else:
        alpha[i] = 1
        alpha[i + 1] = -1
    return alpha


def generator(i: int, n: int, m: int) -> WeylElement:
    return _reflection(simple_root(i, n, m), n, m)


def word_element(letters: Iterable[int], n: int, m: int) -> WeylElement:
    """[l1, ..., lk] is the element lk o ... o l1."""
    out = WeylElement.identity(n, m)
    for i in letters:
        out = generator(i, n, m) @ out
    return out


def parse_word(text: str) -> list[int]:
    letters: list[int] = []
    for token in text.replace(",", " ").split():
        t = token.strip().lower()
        if not t.startswith("s") or not t[1:].isdigit():
            raise ValueError(f"bad_word_letter letter={token}")
        letters.append(int(t[1:]))
    return letters


def permutation_element(sigma: dict[int, int], n: int, m: int) -> WeylElement:
    """e_i -> e_sigma(i) for the point indices 1..m; unspecified indices stay fixed."""
    mat = np.zeros((m + 1, m + 1), dtype=np.int64)
    mat[0, 0] = 1
    for i in range(1, m + 1):
        mat[sigma.get(i, i), i] = 1
    return WeylElement(n, m, mat)


def apply(w: WeylElement, c: DivisorClass) -> DivisorClass:
    if c.m != w.m or c.n != w.n:
        raise ValueError(f"dimension_mismatch element=({w.n},{w.m}) class=({c.n},{c.m})")
    return DivisorClass(c.n, tuple(int(v) for v in w.matrix @ np.asarray(c.coeffs, dtype=np.int64)))


def anticanonical(n: int, m: int) -> DivisorClass:
    return DivisorClass(n, (n + 1,) + (-(n - 1),) * m)


def half_anticanonical(n: int) -> DivisorClass:
    if n % 2 == 0:
        raise ValueError(f"odd_dimension_required n={n}")
    g = (n + 1) // 2
    return DivisorClass(n, (g,) + (-(g - 1),) * (n + 3))


def curve_pairing(c: DivisorClass) -> int:
    return CurveFunctional(c.n, c.m)(c)


def _subset(items: Iterable[int], n: int) -> Subset:
    s = frozenset(int(i) for i in items)
    if any(not 1 <= i <= n + 3 for i in s):
        raise ValueError(f"index_out_of_range subset={sorted(s)} m={n + 3}")
    return s


def d_class(subset: Iterable[int], n: int) -> DivisorClass:
    i_set = _subset(subset, n)
    if len(i_set) % 2 == 0:
        raise ValueError(f"odd_subset_required size={len(i_set)}")
    k = (len(i_set) - 1) // 2
    coeffs = [k] + [-(k - 1) if i in i_set else -k for i in range(1, n + 4)]
    return DivisorClass(n, tuple(coeffs))


def _pair_element(a: int, b: int, n: int) -> WeylElement:
    m = n + 3
    a, b = min(a, b), max(a, b)
    base = generator(0, n, m) @ generator(n + 2, n, m)
    # sigma = (b, n+3) o (a, n+2) sends {n+2, n+3} onto {a, b}
    first = {a: n + 2, n + 2: a} if a != n + 2 else {}
    second = {b: n + 3, n + 3: b} if b != n + 3 else {}
    sigma = {i: second.get(first.get(i, i), first.get(i, i)) for i in range(1, m + 1)}
    inverse = {v: k for k, v in sigma.items()}
    return permutation_element(sigma, n, m) @ base @ permutation_element(inverse, n, m)


def default_pairing(subset: Iterable[int]) -> list[tuple[int, int]]:
    items = sorted(subset)
    return [(items[k], items[k + 1]) for k in range(0, len(items), 2)]


def w_element(subset: Iterable[int], n: int, pairing: Sequence[tuple[int, int]] | None = None) -> WeylElement:
    j_set = _subset(subset, n)
    if len(j_set) % 2:
        raise ValueError(f"even_subset_required size={len(j_set)}")
    pairs = list(pairing) if pairing is not None else default_pairing(j_set)
    if frozenset(i for pair in pairs for i in pair) != j_set or 2 * len(pairs) != len(j_set):
        raise ValueError(f"pairing_invalid subset={sorted(j_set)}")
    out = WeylElement.identity(n, n + 3)
    for a, b in pairs:
        out = _pair_element(a, b, n) @ out
    return out


def even_subsets(n: int) -> Iterator[Subset]:
    idx = range(1, n + 4)
    for size in range(0, n + 4, 2):
        for combo in combinations(idx, size):
            yield frozenset(combo)


def odd_subsets(n: int) -> Iterator[Subset]:
    idx = range(1, n + 4)
    for size in range(1, n + 4, 2):
        for combo in combinations(idx, size):
            yield frozenset(combo)


def hyperplane_image(subset: Iterable[int], n: int) -> DivisorClass:
    j_set = _subset(subset, n)
    if len(j_set) % 2:
        raise ValueError(f"even_subset_required size={len(j_set)}")
    k = len(j_set) // 2
    coeffs = [k * (n - 1) + 1] + [-(k - 1) * (n - 1) if i in j_set else -k * (n - 1) for i in range(1, n + 4)]
    return DivisorClass(n, tuple(coeffs))


def w_image_closed_form(subset: Iterable[int], s: int, n: int) -> DivisorClass:
    j_set = _subset(subset, n)
    if not 1 <= s <= n + 3:
        raise ValueError(f"index_out_of_range s={s}")
    return d_class(j_set ^ {s}, n)


def homaloidal_type(subset: Iterable[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Degree and base multiplicities of the hypersurfaces realising w_J."""
    image = hyperplane_image(subset, n)
    return image.degree, image.multiplicities
