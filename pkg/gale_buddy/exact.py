from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd, lcm, prod

import sympy as sp
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Rational = Fraction
Monomial = tuple[int, ...]

RationalLike = Fraction | int | str


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not_a_rational value={value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"not_a_rational value={value!r}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not_a_rational value={text!r}") from None


def format_rational(value: Fraction | int) -> str:
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(f"dimension_mismatch rows={self.rows} cols={self.cols} entries={len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> Matrix:
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and cols != width:
            raise ValueError(f"dimension_mismatch cols={cols} width={width}")
        entries: list[Fraction] = []
        for row in rows:
            if len(row) != width:
                raise ValueError(f"dimension_mismatch cols={width} row={len(row)}")
            entries.extend(to_rational(v) for v in row)
        return cls(len(rows), width, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int | None = None) -> Matrix:
        height = len(columns[0]) if columns else (rows or 0)
        if any(len(col) != height for col in columns):
            raise ValueError(f"dimension_mismatch rows={height}")
        return cls(height, len(columns), tuple(to_rational(col[i]) for i in range(height) for col in columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> Matrix:
        return cls(size, size, tuple(Fraction(int(i == j)) for i in range(size) for j in range(size)))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> Matrix:
        size = len(values)
        vals = [to_rational(v) for v in values]
        return cls(size, size, tuple(vals[i] if i == j else Fraction(0) for i in range(size) for j in range(size)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"dimension_mismatch left={self.rows}x{self.cols} right={other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out: list[Fraction] = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ValueError(f"dimension_mismatch cols={self.cols} vector={len(vector)}")
        v = [to_rational(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0)) for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_domain(self) -> DomainMatrix:
        rep: dict[int, dict[int, object]] = {}
        for i in range(self.rows):
            row = {j: QQ(e.numerator, e.denominator) for j, e in enumerate(self.row(i)) if e}
            if row:
                rep[i] = row
        return DomainMatrix(rep, (self.rows, self.cols), QQ)

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> Matrix:
        rows, cols = dm.shape
        entries = [Fraction(0)] * (rows * cols)
        for i, row in dm.to_sparse().rep.items():
            for j, v in row.items():
                entries[i * cols + j] = Fraction(int(v.numerator), int(v.denominator))
        return cls(rows, cols, tuple(entries))

    def rank(self) -> int:
        return rref(self)[1]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError(f"dimension_mismatch rows={self.rows} cols={self.cols}")
        if self.rows == 0:
            return Fraction(1)
        v = self.to_domain().to_dense().det()
        return Fraction(int(v.numerator), int(v.denominator))

    def inverse(self) -> Matrix:
        if self.rows != self.cols:
            raise ValueError(f"dimension_mismatch rows={self.rows} cols={self.cols}")
        size = self.rows
        eye = Matrix.identity(size)
        aug = Matrix.from_rows([list(self.row(i)) + list(eye.row(i)) for i in range(size)], cols=2 * size)
        reduced, rank, pivots = rref(aug)
        if pivots[:size] != list(range(size)):
            raise ValueError("singular_matrix")
        return Matrix.from_rows([list(reduced.row(i)[size:]) for i in range(size)], cols=size)


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return m, 0, []
    reduced, pivots = m.to_domain().rref()
    return Matrix.from_domain(reduced), len(pivots), [int(p) for p in pivots]


def nullspace_basis(m: Matrix) -> Matrix:
    reduced, _, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    rows: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        rows.append(v)
    return Matrix.from_rows(rows, cols=m.cols)


@lru_cache(maxsize=None)
def monomials(variables: int, degree: int) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for combo in combinations_with_replacement(range(variables), degree):
        exps = [0] * variables
        for v in combo:
            exps[v] += 1
        out.append(tuple(exps))
    return tuple(out)


def _falling(a: int, k: int) -> int:
    return prod(range(a - k + 1, a + 1)) if k else 1


@dataclass(frozen=True, slots=True)
class Polynomial:
    variables: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            if len(mono) != self.variables:
                raise ValueError(f"dimension_mismatch variables={self.variables} monomial={mono}")
            c = to_rational(coeff)
            if c:
                clean[tuple(mono)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, variables: int) -> Polynomial:
        return cls(variables, {})

    @classmethod
    def constant(cls, value: RationalLike, variables: int) -> Polynomial:
        return cls(variables, {(0,) * variables: to_rational(value)})

    @classmethod
    def variable(cls, index: int, variables: int) -> Polynomial:
        return cls(variables, {tuple(int(i == index) for i in range(variables)): Fraction(1)})

    @classmethod
    def from_coefficients(cls, variables: int, degree: int, coeffs: Sequence[RationalLike]) -> Polynomial:
        monos = monomials(variables, degree)
        if len(coeffs) != len(monos):
            raise ValueError(f"dimension_mismatch monomials={len(monos)} coefficients={len(coeffs)}")
        return cls(variables, {mono: to_rational(c) for mono, c in zip(monos, coeffs)})

    @classmethod
    def univariate(cls, coeffs: Sequence[RationalLike]) -> Polynomial:
        return cls(1, {(k,): to_rational(c) for k, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(mono) for mono in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(mono) for mono in self.terms}) <= 1

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def coefficients(self, degree: int | None = None) -> list[Fraction]:
        d = self.degree if degree is None else degree
        return [self.coefficient(mono) for mono in monomials(self.variables, max(d, 0))]

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.variables:
            raise ValueError(f"dimension_mismatch variables={self.variables} point={len(point)}")
        x = [to_rational(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            total += coeff * prod((x[i] ** e for i, e in enumerate(mono) if e), start=Fraction(1))
        return total

    def partial(self, orders: Sequence[int]) -> Polynomial:
        if len(orders) != self.variables:
            raise ValueError(f"dimension_mismatch variables={self.variables} orders={len(orders)}")
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            if any(e < k for e, k in zip(mono, orders)):
                continue
            factor = prod(_falling(e, k) for e, k in zip(mono, orders))
            key = tuple(e - k for e, k in zip(mono, orders))
            out[key] = out.get(key, Fraction(0)) + coeff * factor
        return Polynomial(self.variables, out)

    def derivative(self, index: int = 0) -> Polynomial:
        return self.partial([int(i == index) for i in range(self.variables)])

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_same(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Polynomial(self.variables, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | RationalLike) -> Polynomial:
        if not isinstance(other, Polynomial):
            f = to_rational(other)
            return Polynomial(self.variables, {m: c * f for m, c in self.terms.items()})
        self._check_same(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(1, self.variables)
        for _ in range(k):
            out = out * self
        return out

    def _check_same(self, other: Polynomial) -> None:
        if self.variables != other.variables:
            raise ValueError(f"dimension_mismatch variables={self.variables} other={other.variables}")

    def specialize(self, values: Sequence[RationalLike | None]) -> Polynomial:
        # None keeps the variable; the result lives in the kept variables, in order
        if len(values) != self.variables:
            raise ValueError(f"dimension_mismatch variables={self.variables} values={len(values)}")
        kept = [i for i, v in enumerate(values) if v is None]
        fixed = {i: to_rational(v) for i, v in enumerate(values) if v is not None}
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            c = coeff * prod((fixed[i] ** mono[i] for i in fixed if mono[i]), start=Fraction(1))
            if not c:
                continue
            key = tuple(mono[i] for i in kept)
            out[key] = out.get(key, Fraction(0)) + c
        return Polynomial(len(kept), out)

    def transform(self, matrix: Matrix) -> Polynomial:
        """Substitute x_i = sum_j matrix[i, j] * x'_j."""
        if matrix.rows != self.variables:
            raise ValueError(f"dimension_mismatch variables={self.variables} rows={matrix.rows}")
        forms = [
            Polynomial(matrix.cols, {tuple(int(k == j) for k in range(matrix.cols)): matrix[i, j] for j in range(matrix.cols)})
            for i in range(matrix.rows)
        ]
        total = Polynomial.zero(matrix.cols)
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(coeff, matrix.cols)
            for i, e in enumerate(mono):
                if e:
                    term = term * forms[i] ** e
            total = total + term
        return total

    # univariate helpers

    def _require_univariate(self) -> None:
        if self.variables != 1:
            raise ValueError(f"not_univariate variables={self.variables}")

    def dense(self) -> list[Fraction]:
        """Coefficients from the constant term up."""
        self._require_univariate()
        return [self.coefficient((k,)) for k in range(self.degree + 1)]

    def leading_coefficient(self) -> Fraction:
        self._require_univariate()
        return self.coefficient((self.degree,)) if self.terms else Fraction(0)

    def monic(self) -> Polynomial:
        lc = self.leading_coefficient()
        return self * (1 / lc) if lc else self

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial_division_by_zero")
        quot, rem = _to_sympy(self).div(_to_sympy(other))
        return _from_sympy(quot), _from_sympy(rem)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m), reverse=True):
            coeff = format_rational(self.terms[mono])
            vars_ = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(mono) if e)
            parts.append(f"{coeff}*{vars_}" if vars_ else coeff)
        return " + ".join(parts)


_X = sp.Symbol("x")


def _to_sympy(f: Polynomial) -> sp.Poly:
    f._require_univariate()
    coeffs = [sp.Rational(c.numerator, c.denominator) for c in reversed(f.dense())]
    return sp.Poly.from_list(coeffs or [0], _X, domain=QQ)


def _from_sympy(p: sp.Poly) -> Polynomial:
    return Polynomial.univariate([Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    return _from_sympy(_to_sympy(f).gcd(_to_sympy(g))).monic()


def sylvester_matrix(f: Polynomial, g: Polynomial) -> Matrix:
    fd, gd = f.dense()[::-1], g.dense()[::-1]
    m, n = len(fd) - 1, len(gd) - 1
    size = m + n
    rows: list[list[Fraction]] = []
    for k in range(n):
        rows.append([Fraction(0)] * k + fd + [Fraction(0)] * (size - m - 1 - k))
    for k in range(m):
        rows.append([Fraction(0)] * k + gd + [Fraction(0)] * (size - n - 1 - k))
    return Matrix.from_rows(rows, cols=size)


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    f._require_univariate()
    g._require_univariate()
    if f.degree < 1 or g.degree < 1:
        raise ValueError(f"degree_too_low deg_f={f.degree} deg_g={g.degree}")
    return sylvester_matrix(f, g).det()


def interpolate(xs: Sequence[RationalLike], ys: Sequence[RationalLike]) -> Polynomial:
    pts = [to_rational(x) for x in xs]
    vals = [to_rational(y) for y in ys]
    if len(pts) != len(vals) or len(set(pts)) != len(pts):
        raise ValueError("interpolation_nodes_invalid")
    total = Polynomial.zero(1)
    for i, (xi, yi) in enumerate(zip(pts, vals)):
        if not yi:
            continue
        basis = Polynomial.constant(yi, 1)
        for j, xj in enumerate(pts):
            if j != i:
                basis = basis * Polynomial.univariate([-xj, 1]) * (1 / (xi - xj))
        total = total + basis
    return total


def primitive_integers(values: Iterable[RationalLike]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    vals = [to_rational(v) for v in values]
    if not any(vals):
        raise ValueError("zero_vector")
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    first = next(i for i in ints if i)
    if first < 0:
        ints = [-i for i in ints]
    return tuple(ints)
