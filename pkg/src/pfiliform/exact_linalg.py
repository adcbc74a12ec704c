"""Exact rational matrices and subspaces.

Everything here works over :class:`fractions.Fraction`; nothing is ever
rounded.  Subspaces are stored in reduced row-echelon form so that two equal
subspaces always compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def as_vector(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    """The 1-based ``i``-th standard basis vector of length ``n``."""
    if not 1 <= i <= n:
        raise IndexError(f"basis index {i} out of range 1..{n}")
    return tuple(ONE if k == i - 1 else ZERO for k in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    nrows: int
    ncols: int
    entries: tuple  # row-major, length nrows * ncols

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError("entries do not match the matrix shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [as_vector(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(c for r in rows for c in r))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls.from_rows([[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, (ZERO,) * (nrows * ncols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([unit_vector(n, i + 1) for i in range(n)], ncols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.ncols] if self.ncols else ()

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix.from_rows(
                [[_dot(r, c) for c in cols] for r in self.rows()], ncols=other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(_dot(r, v) for r in self.rows())

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return rank(self.rows())

    def __str__(self):
        return "\n".join("[" + " ".join(str(c) for c in r) + "]" for r in self.rows())


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan in place; leftmost pivot column, topmost candidate row."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def row_reduce(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form of ``m`` (zero rows kept at the bottom) and its rank."""
    reduced, pivots = _rref_rows([list(r) for r in m.rows()], m.ncols)
    rank_ = len(pivots)
    padding = [[ZERO] * m.ncols for _ in range(m.nrows - rank_)]
    return Matrix.from_rows(reduced + padding, ncols=m.ncols), rank_


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        r = [as_scalar(x) for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        ir = [int(x * den) for x in r]
        if any(ir):
            out.append(ir)
    return out


def integer_basis(rows: Iterable[Sequence[int]]) -> list[list[int]]:
    """Independent integer rows spanning the same space (fraction-free echelon)."""
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    pivot_cols: list[int] = []
    for row in work:
        for b, c in zip(basis, pivot_cols):
            if row[c]:
                f, g = b[c], row[c]
                row = [f * x - g * y for x, y in zip(row, b)]
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is None:
            continue
        g = 0
        for x in row:
            g = gcd(g, x)
        if g > 1:
            row = [x // g for x in row]
        # keep older basis rows free of the new pivot so later reductions stay echelon
        for k, b in enumerate(basis):
            if b[lead]:
                f, h = row[lead], b[lead]
                nb = [f * x - h * y for x, y in zip(b, row)]
                gg = 0
                for x in nb:
                    gg = gcd(gg, x)
                basis[k] = [x // gg for x in nb] if gg > 1 else nb
        basis.append(row)
        pivot_cols.append(lead)
    return basis


def rank(rows: Iterable[Sequence]) -> int:
    """Rank of a list of rational row vectors, via integer elimination."""
    return len(integer_basis(_integer_rows(rows)))


def kernel(m: Matrix) -> "Subspace":
    """Right null space ``{v : m v = 0}``."""
    reduced, pivots = _rref_rows([list(r) for r in m.rows()], m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    vectors = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        vectors.append(v)
    return Subspace.span(vectors, m.ncols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held as its canonical reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple  # tuple of Vector, RREF, no zero rows

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(as_vector(v)) for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise ValueError("vector length does not match ambient dimension")
        reduced, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i + 1) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(c for c, x in enumerate(r) if x) for r in self.basis]

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return all(subspace_contains(other, v) for v in self.basis)

    def reduce(self, v: Sequence) -> list[Fraction]:
        """Remainder of ``v`` after clearing every pivot column of the basis."""
        v = list(as_vector(v))
        for row, pc in zip(self.basis, self.pivots):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` on the canonical basis; ValueError if ``v`` is outside."""
        rest = self.reduce(v)
        if any(rest):
            raise ValueError("vector is not in the subspace")
        v = as_vector(v)
        return tuple(v[pc] for pc in self.pivots)


def subspace_join(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    if not b.basis:
        return a
    if not a.basis:
        return b
    return Subspace.span(a.basis + b.basis, a.ambient_dim)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    if len(v) != a.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    return not any(a.reduce(v))


def solve(columns: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients expressing ``target`` in the linearly independent ``columns``.

    Returns None when ``target`` is outside their span.
    """
    n = len(target)
    k = len(columns)
    aug = [[as_scalar(columns[j][i]) for j in range(k)] + [as_scalar(target[i])]
           for i in range(n)]
    reduced, pivots = _rref_rows(aug, k + 1)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    return tuple(row[k] for row in reduced)
