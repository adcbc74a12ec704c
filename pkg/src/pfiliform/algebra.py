"""Finite-dimensional algebras given by sparse structure constants.

Basis indices are 1-based throughout, so ``products[(1, 2)] == ((3, 1),)``
reads "e1 e2 = e3" exactly as a multiplication table is written by hand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Mapping, NamedTuple, Sequence

from .errors import AlgebraError
from .exact_linalg import (
    ZERO,
    Matrix,
    Subspace,
    as_scalar,
    as_vector,
    kernel,
    subspace_join,
    unit_vector,
)

Product = tuple  # ((k, coeff), ...) sorted by k


@dataclass(frozen=True)
class Algebra:
    dim: int
    products: dict = field(default_factory=dict)  # (i, j) -> ((k, Fraction), ...)
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.dim))

    def basis_product(self, i: int, j: int) -> Product:
        return self.products.get((i, j), ())

    def basis_vector(self, label_or_index) -> tuple:
        return unit_vector(self.dim, self.index(label_or_index))

    def index(self, label_or_index) -> int:
        if isinstance(label_or_index, int):
            if not 1 <= label_or_index <= self.dim:
                raise AlgebraError(f"basis index {label_or_index} out of range")
            return label_or_index
        try:
            return self.labels.index(label_or_index) + 1
        except ValueError:
            raise AlgebraError(f"unknown basis label {label_or_index!r}") from None

    def is_zero_product(self) -> bool:
        return not self.products

    def table_lines(self) -> list[str]:
        """Human-readable nonzero products, e.g. ``e1*e2 = e3``."""
        lines = []
        for (i, j), terms in sorted(self.products.items()):
            rhs = " + ".join(_term(c, self.labels[k - 1]) for k, c in terms)
            lines.append(f"{self.labels[i - 1]}*{self.labels[j - 1]} = {rhs}")
        return lines

    def __repr__(self):
        return f"Algebra(dim={self.dim}, {len(self.products)} nonzero products)"


def _term(c: Fraction, label: str) -> str:
    if c == 1:
        return label
    if c == -1:
        return f"-{label}"
    return f"({c}){label}"


def default_labels(n: int) -> tuple:
    return tuple(f"e{i}" for i in range(1, n + 1))


def make_algebra(dim: int, products: Mapping, labels: Sequence[str] | None = None) -> Algebra:
    """Validate a multiplication table and build an :class:`Algebra`.

    ``products`` maps ``(i, j)`` to the expansion of ``e_i e_j``: either a
    single index ``k`` (meaning ``e_k``), a mapping ``{k: coeff}``, or a list of
    ``(k, coeff)`` pairs.  Zero coefficients are rejected rather than dropped.
    """
    if dim < 0:
        raise AlgebraError("dimension must be non-negative")
    table = {}
    for key, rhs in products.items():
        i, j = key
        for idx in (i, j):
            if not 1 <= idx <= dim:
                raise AlgebraError(f"index {idx} in product {key} out of range 1..{dim}")
        if isinstance(rhs, int) and not isinstance(rhs, bool):
            pairs = [(rhs, 1)]
        elif isinstance(rhs, Mapping):
            pairs = list(rhs.items())
        else:
            pairs = list(rhs)
        terms = {}
        for k, c in pairs:
            if not 1 <= k <= dim:
                raise AlgebraError(f"result index {k} in product {key} out of range 1..{dim}")
            c = as_scalar(c)
            if c == 0:
                raise AlgebraError(f"zero coefficient in product {key}")
            if k in terms:
                raise AlgebraError(f"duplicate result index {k} in product {key}")
            terms[k] = c
        if terms:
            table[(i, j)] = tuple(sorted(terms.items()))
    if labels is None:
        labels = default_labels(dim)
    labels = tuple(labels)
    if len(labels) != dim or len(set(labels)) != dim:
        raise AlgebraError("labels must be distinct and one per basis vector")
    return Algebra(dim, table, labels)


def zero_algebra(n: int) -> Algebra:
    return make_algebra(n, {})


def _check_length(A: Algebra, v) -> tuple:
    v = as_vector(v)
    if len(v) != A.dim:
        raise AlgebraError(f"vector of length {len(v)} in an algebra of dimension {A.dim}")
    return v


def multiply(A: Algebra, x, y) -> tuple:
    """Bilinear product ``x y`` of two coordinate vectors."""
    x = _check_length(A, x)
    y = _check_length(A, y)
    out = [ZERO] * A.dim
    xs = [(i, c) for i, c in enumerate(x, 1) if c]
    ys = [(j, c) for j, c in enumerate(y, 1) if c]
    for (i, a), (j, b) in cartesian(xs, ys):
        for k, c in A.products.get((i, j), ()):
            out[k - 1] += a * b * c
    return tuple(out)


def _sparse_times_basis(A: Algebra, terms, k: int, left: bool) -> dict:
    out: dict = {}
    for m, c in terms:
        pair = (m, k) if left else (k, m)
        for r, d in A.products.get(pair, ()):
            out[r] = out.get(r, ZERO) + c * d
    return {r: c for r, c in out.items() if c}


def associativity_defects(A: Algebra) -> list[tuple[int, int, int]]:
    """Basis triples ``(i, j, k)`` with ``(e_i e_j) e_k != e_i (e_j e_k)``.

    Checking basis triples suffices because the associator is trilinear.
    """
    defects = []
    n = A.dim
    for i, j, k in cartesian(range(1, n + 1), repeat=3):
        lhs = _sparse_times_basis(A, A.basis_product(i, j), k, left=True)
        rhs = _sparse_times_basis(A, A.basis_product(j, k), i, left=False)
        if lhs != rhs:
            defects.append((i, j, k))
    return defects


def is_associative(A: Algebra) -> bool:
    return not associativity_defects(A)


def span_of_products(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    return Subspace.span([multiply(A, u, v) for u in U.basis for v in V.basis], A.dim)


@dataclass(frozen=True)
class PowerSeries:
    terms: tuple  # terms[i] is A^(i+1)
    stabilized: bool  # True iff the series reached zero

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)

    def power(self, i: int) -> Subspace:
        """``A^i`` (1-based); past the computed range the last term persists."""
        if i < 1:
            raise ValueError("powers start at 1")
        return self.terms[min(i, len(self.terms)) - 1]


def power_series(A: Algebra) -> PowerSeries:
    """``A^1 = A`` and ``A^(i+1) = sum_{k=1..i} A^k A^(i+1-k)``.

    Stops at the first zero term (included) or the first repeated term (not
    repeated).
    """
    terms = [Subspace.full(A.dim)]
    while True:
        if terms[-1].dim == 0:
            return PowerSeries(tuple(terms), True)
        i = len(terms)
        nxt = Subspace.zero(A.dim)
        for k in range(1, i + 1):
            nxt = subspace_join(nxt, span_of_products(A, terms[k - 1], terms[i - k]))
        if nxt == terms[-1]:
            return PowerSeries(tuple(terms), False)
        terms.append(nxt)


def nilindex(A: Algebra) -> int | None:
    """Smallest ``k`` with ``A^k = 0``, or None when ``A`` is not nilpotent.

    Under this convention the null-filiform algebra of dimension n has
    nilindex n + 1 and a zero-product algebra has nilindex 2.
    """
    series = power_series(A)
    if not series.stabilized:
        return None
    return len(series.terms)


def is_nilpotent(A: Algebra) -> bool:
    return power_series(A).stabilized


class AnnihilatorInvariants(NamedTuple):
    left: int
    right: int
    two_sided: int
    commutator: int


def _annihilator_rows(A: Algebra, left: bool) -> list[list[Fraction]]:
    # rows indexed by (j, k); column i holds the e_k-coefficient of e_i e_j (or e_j e_i)
    n = A.dim
    rows = []
    for j in range(1, n + 1):
        block = [[ZERO] * n for _ in range(n)]
        for i in range(1, n + 1):
            pair = (i, j) if left else (j, i)
            for k, c in A.products.get(pair, ()):
                block[k - 1][i - 1] = c
        rows.extend(block)
    return rows


def annihilator_invariants(A: Algebra) -> AnnihilatorInvariants:
    """Dimensions of the left, right and two-sided annihilators and of span{xy - yx}."""
    n = A.dim
    left_rows = _annihilator_rows(A, left=True)
    right_rows = _annihilator_rows(A, left=False)
    left = kernel(Matrix.from_rows(left_rows, ncols=n)).dim
    right = kernel(Matrix.from_rows(right_rows, ncols=n)).dim
    both = kernel(Matrix.from_rows(left_rows + right_rows, ncols=n)).dim
    commutators = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei, ej = unit_vector(n, i), unit_vector(n, j)
            d = tuple(a - b for a, b in zip(multiply(A, ei, ej), multiply(A, ej, ei)))
            if any(d):
                commutators.append(d)
    comm = Subspace.span(commutators, n).dim
    return AnnihilatorInvariants(left, right, both, comm)


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Block-diagonal sum; ``B``'s indices are shifted past ``A``'s."""
    shift = A.dim
    table = dict(A.products)
    for (i, j), terms in B.products.items():
        table[(i + shift, j + shift)] = tuple((k + shift, c) for k, c in terms)
    labels = A.labels + B.labels
    if len(set(labels)) != len(labels):
        labels = default_labels(A.dim + B.dim)
    return Algebra(A.dim + B.dim, table, labels)
