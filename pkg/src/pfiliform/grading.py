"""Natural gradation ``gr A = A^1/A^2 + A^2/A^3 + ...`` and graded-basis witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, PowerSeries, multiply, power_series
from .errors import (
    AlgebraError,
    InconsistentGradationError,
    NotNaturallyGradedError,
    NotNilpotentError,
)
from .exact_linalg import Subspace, rank, solve, subspace_join, unit_vector


@dataclass(frozen=True)
class Gradation:
    components: tuple  # Subspace per degree, degree 1 first
    bases: tuple  # chosen basis vectors of each component
    dims: tuple

    @property
    def degree_count(self) -> int:
        return len(self.components)

    def s_profile(self) -> tuple:
        """``dims[i] - 1``: how many vectors besides the e-chain live in each degree."""
        return tuple(d - 1 for d in self.dims)


@dataclass(frozen=True)
class GradationPositions:
    r: tuple

    def __post_init__(self):
        if any(a > b for a, b in zip(self.r, self.r[1:])):
            raise ValueError("positions must be weakly increasing")


def _nilpotent_series(A: Algebra) -> PowerSeries:
    series = power_series(A)
    if not series.stabilized:
        raise NotNilpotentError("algebra is not nilpotent")
    return series


def _complement(A: Algebra, big: Subspace, small: Subspace) -> list:
    """Complement of ``small`` in ``big``: basis vectors first, in index order."""
    chosen = []
    current = small
    candidates = [unit_vector(A.dim, i) for i in range(1, A.dim + 1)]
    for v in candidates + list(big.basis):
        if current.dim == big.dim:
            break
        if v in big and v not in current:
            chosen.append(v)
            current = subspace_join(current, Subspace.span([v], A.dim))
    return chosen


def natural_gradation(A: Algebra) -> Gradation:
    series = _nilpotent_series(A)
    terms = series.terms
    bases = [tuple(_complement(A, terms[i], terms[i + 1])) for i in range(len(terms) - 1)]
    comps = tuple(Subspace.span(b, A.dim) for b in bases)
    return Gradation(comps, tuple(bases), tuple(len(b) for b in bases))


def graded_structure(A: Algebra, g: Gradation) -> Algebra:
    """Multiplication table of ``gr A`` on the concatenated component bases.

    The product of degree-i and degree-j basis vectors keeps only its
    degree-(i+j) coordinates; anything deeper is truncated.
    """
    new_basis = [v for b in g.bases for v in b]
    degree = [d for d, b in enumerate(g.bases, 1) for _ in b]
    if len(new_basis) != A.dim or rank(new_basis) != A.dim:
        raise InconsistentGradationError("components do not form a basis")
    table = {}
    for a, u in enumerate(new_basis):
        for b, v in enumerate(new_basis):
            uv = multiply(A, u, v)
            if not any(uv):
                continue
            coords = solve(new_basis, uv)
            target = degree[a] + degree[b]
            terms = {}
            for k, c in enumerate(coords):
                if not c:
                    continue
                if degree[k] < target:
                    raise InconsistentGradationError(
                        f"product lands below degree {target}: not a filtration")
                if degree[k] == target:
                    terms[k + 1] = c
            if terms:
                table[(a + 1, b + 1)] = tuple(sorted(terms.items()))
    labels = []
    for k, v in enumerate(new_basis):
        hit = [i for i, x in enumerate(v) if x]
        if len(hit) == 1 and v[hit[0]] == 1:
            labels.append(A.labels[hit[0]])
        else:
            labels.append(f"g{k + 1}")
    if len(set(labels)) != len(labels):
        labels = [f"g{k + 1}" for k in range(len(labels))]
    return Algebra(A.dim, table, tuple(labels))


def check_homogeneous(A: Algebra, degrees: Sequence[int]) -> bool:
    """True iff each ``e_i e_j`` lies in the span of basis vectors of degree ``d_i + d_j``."""
    if len(degrees) != A.dim:
        raise AlgebraError("one degree per basis vector is required")
    for (i, j), terms in A.products.items():
        target = degrees[i - 1] + degrees[j - 1]
        if any(degrees[k - 1] != target for k, _ in terms):
            return False
    return True


def natural_graded_witness(A: Algebra, degrees: Sequence[int]) -> bool:
    """Certify ``A ~ gr A`` through a homogeneous presented basis.

    Besides homogeneity, the number of basis vectors in degree d must equal
    ``dim A^d - dim A^(d+1)`` for every d.
    """
    if any(d < 1 for d in degrees):
        raise AlgebraError("degrees must be positive")
    series = _nilpotent_series(A)
    if not check_homogeneous(A, degrees):
        return False
    top = max(list(degrees) + [len(series.terms)])
    for d in range(1, top + 1):
        quotient = series.power(d).dim - series.power(d + 1).dim
        if sum(1 for x in degrees if x == d) != quotient:
            return False
    return True


def filtration_degrees(A: Algebra) -> tuple:
    """For each basis vector, the largest i with ``e_b`` in ``A^i``."""
    terms = _nilpotent_series(A).terms
    out = []
    for b in range(1, A.dim + 1):
        v = unit_vector(A.dim, b)
        out.append(max(i for i, t in enumerate(terms, 1) if v in t))
    return tuple(out)


def gradation_positions(A: Algebra, e_labels: Sequence[str], f_labels: Sequence[str]) -> GradationPositions:
    """Degrees ``r_s`` of the f-vectors in the certified natural gradation, sorted."""
    e_idx = [A.index(x) for x in e_labels]
    f_idx = [A.index(x) for x in f_labels]
    if sorted(e_idx + f_idx) != list(range(1, A.dim + 1)):
        raise AlgebraError("e- and f-labels must partition the basis")
    degrees = filtration_degrees(A)
    if not natural_graded_witness(A, degrees):
        raise NotNaturallyGradedError("presented basis is not a natural grading")
    return GradationPositions(tuple(sorted(degrees[i - 1] for i in f_idx)))
