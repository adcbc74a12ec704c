"""Left multiplication operators, Jordan profiles and characteristic sequences."""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import gcd

from .algebra import Algebra, multiply, power_series
from .errors import AlgebraError, ElementInSquareError, NotNilpotentError
from .exact_linalg import Matrix, Subspace, as_vector, integer_basis, unit_vector


@dataclass(frozen=True, order=True)
class CharacteristicSequence:
    """Jordan block sizes in non-increasing order.

    Ordering is lexicographic on ``parts``; since parts are positive this is
    the same as comparing after padding the shorter sequence with zeros.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be non-increasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def p_filiform(cls, n: int, p: int) -> "CharacteristicSequence":
        if not 0 <= p < n:
            raise ValueError(f"no p-filiform sequence for n={n}, p={p}")
        return cls((n - p,) + (1,) * p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(a: CharacteristicSequence, b: CharacteristicSequence) -> Order:
    width = max(len(a.parts), len(b.parts))
    pa = a.parts + (0,) * (width - len(a.parts))
    pb = b.parts + (0,) * (width - len(b.parts))
    for x, y in zip(pa, pb):
        if x != y:
            return Order.LESS if x < y else Order.GREATER
    return Order.EQUAL


def left_mult_matrix(A: Algebra, x) -> Matrix:
    """Matrix of ``z -> x z``; column j is ``x e_j``."""
    x = as_vector(x)
    if len(x) != A.dim:
        raise AlgebraError(f"vector of length {len(x)} in an algebra of dimension {A.dim}")
    cols = [multiply(A, x, unit_vector(A.dim, j)) for j in range(1, A.dim + 1)]
    return Matrix.from_columns(cols, A.dim)


def _image_ranks(m: Matrix) -> list[int]:
    """``[rank(m^0), rank(m^1), ...]`` down to 0; NotNilpotentError otherwise."""
    n = m.nrows
    if m.ncols != n:
        raise ValueError("Jordan profile needs a square matrix")
    # a global rescaling of m leaves every image unchanged, so work over the integers
    lcm = 1
    for c in m.entries:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    imat = [[int(c * lcm) for c in r] for r in m.rows()]
    image = [[int(i == j) for j in range(n)] for i in range(n)]
    ranks = [n]
    if n == 0:
        return ranks
    for _ in range(n):
        image = integer_basis([[sum(a * b for a, b in zip(r, v) if a and b) for r in imat]
                               for v in image])
        ranks.append(len(image))
        if not image:
            return ranks
        if ranks[-1] == ranks[-2]:
            break
    raise NotNilpotentError("matrix is not nilpotent")


def nilpotent_jordan_profile(m: Matrix) -> CharacteristicSequence:
    """Jordan block sizes of a nilpotent matrix from the ranks of its powers.

    The number of blocks of size at least k is ``rank(m^(k-1)) - rank(m^k)``.
    """
    ranks = _image_ranks(m)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exactly)
    return CharacteristicSequence(tuple(parts))


def _square(A: Algebra) -> Subspace:
    series = power_series(A)
    return series.power(2)


def char_seq_element(A: Algebra, x, square: Subspace | None = None) -> CharacteristicSequence:
    """``C(x)``: Jordan profile of ``L_x`` for ``x`` outside ``A^2``."""
    if square is None:
        square = _square(A)
    x = as_vector(x)
    if len(x) != A.dim:
        raise AlgebraError(f"vector of length {len(x)} in an algebra of dimension {A.dim}")
    if x in square:
        raise ElementInSquareError("element lies in A^2")
    return nilpotent_jordan_profile(left_mult_matrix(A, x))


def _random_vector(rng: random.Random, n: int) -> tuple:
    return tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))


def sample_elements(A: Algebra, trials: int, seed: int, square: Subspace | None = None) -> list:
    """Basis vectors outside ``A^2`` followed by ``trials`` seeded random ones."""
    if square is None:
        square = _square(A)
    if square.dim == A.dim:
        raise AlgebraError("A = A^2: no element outside the square")
    samples = [v for v in (unit_vector(A.dim, i) for i in range(1, A.dim + 1))
               if v not in square]
    rng = random.Random(seed)
    drawn = 0
    while drawn < trials:
        v = _random_vector(rng, A.dim)
        if v in square:
            continue
        samples.append(v)
        drawn += 1
    return samples


def char_seq_algebra(A: Algebra, trials: int = 100, seed: int = 0) -> CharacteristicSequence:
    """Lexicographic maximum of ``C(x)`` over sampled ``x`` outside ``A^2``.

    The maximum over all of ``A \\ A^2`` is attained on a Zariski-open set, so
    generic samples reach it with probability one; the value returned is in
    any case a certified lower bound.
    """
    square = _square(A)
    best = None
    for x in sample_elements(A, trials, seed, square):
        c = char_seq_element(A, x, square)
        if best is None or c > best:
            best = c
            if len(c.parts) == 1:
                break  # (n) is the global maximum
    return best


def is_p_filiform(A: Algebra, p: int, trials: int = 100, seed: int = 0) -> bool:
    if not 0 <= p < A.dim:
        return False
    return char_seq_algebra(A, trials, seed) == CharacteristicSequence.p_filiform(A.dim, p)
