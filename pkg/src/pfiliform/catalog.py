"""Constructors for the null-filiform, filiform, quasi-filiform, degree-p and
naturally graded p-filiform algebras, in their adapted bases."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Algebra, direct_sum, make_algebra, zero_algebra
from .errors import AlgebraError
from .exact_linalg import as_scalar

__all__ = [
    "Family",
    "FamilySpec",
    "null_filiform",
    "filiform_variant",
    "quasi_filiform_variant",
    "degree_p_filiform",
    "direct_sum",
    "p_filiform_family",
    "excluded_jordan_form",
    "build",
    "main_family_specs",
]


class Family(str, Enum):
    NULL_FILIFORM = "null"
    FILIFORM = "filiform"
    QUASI = "quasi"
    DEGREE_P = "degree-p"
    P_FILIFORM_GRADED = "p-filiform"


# b-coefficient key (i, j, k, t): f_{S_k+i} f_{S_t+j} = c e_{k+t+2} + sum_l c_l f_{S_{k+t+1}+l}
BKey = tuple


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    p: int = 0
    variant: int | None = None
    alpha: Fraction | None = None
    s: tuple = ()
    b: Mapping = field(default_factory=dict)
    # "theorem": f*f products only for k + t = n - p - 2;
    # "graded": every degree-compatible pair k + t <= n - p - 2 (the pre-reduction ansatz)
    ansatz: str = "theorem"

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if self.family is Family.P_FILIFORM_GRADED:
            object.__setattr__(self, "s", normalize_profile(self.s, self.n - self.p))
            object.__setattr__(self, "b", _normalize_b(self.b))

    @property
    def chain_length(self) -> int:
        return self.n - self.p

    def sv(self, i: int) -> int:
        """``s_i`` with ``s_i = 0`` outside ``1..n-p``."""
        return self.s[i - 1] if 1 <= i <= len(self.s) else 0

    def block_start(self, k: int) -> int:
        """``s_1 + ... + s_k``."""
        return sum(self.s[:k])

    def validate(self) -> None:
        n, p, fam = self.n, self.p, self.family
        if fam is Family.NULL_FILIFORM:
            if n < 1:
                raise AlgebraError("null-filiform needs n >= 1")
        elif fam is Family.FILIFORM:
            if n <= 3:
                raise AlgebraError("filiform classification needs n > 3")
            if self.variant not in (1, 2, 3, 4):
                raise AlgebraError("filiform variant must be 1..4")
        elif fam is Family.QUASI:
            if n <= 5:
                raise AlgebraError("quasi-filiform classification needs n > 5")
            if self.variant not in (1, 2, 3, 4):
                raise AlgebraError("quasi-filiform variant must be 1..4")
            if (self.alpha is not None) != (self.variant == 2):
                raise AlgebraError("alpha is required for variant 2 and only there")
        elif fam is Family.DEGREE_P:
            if p < 0 or n <= p + 2:
                raise AlgebraError("degree-p filiform needs 0 <= p and n > p + 2")
        elif fam is Family.P_FILIFORM_GRADED:
            self._validate_main()

    def _validate_main(self) -> None:
        s, p, m = self.s, self.p, self.chain_length
        if p < 1 or m < 1:
            raise AlgebraError("p-filiform family needs 1 <= p < n")
        if sum(s) != p:
            raise AlgebraError(f"s-profile {s} must sum to p={p}")
        if any(x < 0 for x in s) or any(a < b for a, b in zip(s, s[1:])):
            raise AlgebraError(f"s-profile {s} must be non-increasing and non-negative")
        if not 1 <= s[0] < p:
            raise AlgebraError(f"s-profile needs 1 <= s_1 < p, got s_1={s[0]}")
        if self.ansatz not in ("theorem", "graded"):
            raise AlgebraError(f"unknown ansatz {self.ansatz!r}")
        allowed = set(b_keys(self))
        for key, (_, fpart) in self.b.items():
            if key not in allowed:
                raise AlgebraError(f"b-coefficient index {key} is not admissible")
            i, j, k, t = key
            if len(fpart) > self.sv(k + t + 2):
                raise AlgebraError(f"b-coefficient {key} has too many f-components")


def normalize_profile(s: Sequence[int], length: int) -> tuple:
    """Pad ``s`` with zeros to ``length``; trailing zeros may be omitted by callers."""
    s = tuple(int(x) for x in s)
    if len(s) > length:
        if any(s[length:]):
            raise AlgebraError(f"s-profile {s} longer than n - p = {length}")
        s = s[:length]
    return s + (0,) * (length - len(s))


def _normalize_b(b: Mapping) -> dict:
    out = {}
    for key, value in b.items():
        if isinstance(value, (tuple, list)) and len(value) == 2 and isinstance(value[1], (tuple, list)):
            e, f = value
        else:
            e, f = value, ()
        out[tuple(key)] = (as_scalar(e), tuple(as_scalar(c) for c in f))
    return out


def b_keys(spec: FamilySpec) -> list:
    """Admissible ``(i, j, k, t)`` for surviving f*f products, sorted."""
    m = spec.chain_length
    keys = []
    for k in range(1, m):
        for t in range(1, m):
            if spec.ansatz == "theorem" and k + t != m - 2:
                continue
            if k + t > m - 2:
                continue
            for i in range(spec.sv(k + 2) + 1, spec.sv(k + 1) + 1):
                for j in range(spec.sv(t + 2) + 1, spec.sv(t + 1) + 1):
                    keys.append((i, j, k, t))
    return sorted(keys)


def _labels(n: int) -> list:
    return [f"e{i}" for i in range(1, n + 1)]


def _chain(n: int, top: int) -> dict:
    """``e_i e_j = e_{i+j}`` for ``i + j <= top``."""
    return {(i, j): i + j for i in range(1, top) for j in range(1, top - i + 1)}


def null_filiform(n: int) -> Algebra:
    FamilySpec(Family.NULL_FILIFORM, n).validate()
    return make_algebra(n, _chain(n, n))


def filiform_variant(n: int, v: int) -> Algebra:
    FamilySpec(Family.FILIFORM, n, variant=v).validate()
    table = _chain(n, n - 1)
    if v in (2, 4):
        table[(n, n)] = n - 1
    if v in (3, 4):
        table[(1, n)] = n - 1
    return make_algebra(n, table)


def quasi_filiform_variant(n: int, v: int, alpha=None) -> Algebra:
    FamilySpec(Family.QUASI, n, variant=v, alpha=alpha).validate()
    table = _chain(n, n - 2)
    if v == 1:
        table[(n - 1, 1)] = n
    elif v == 2:
        table[(1, n - 1)] = n
        a = as_scalar(alpha)
        if a:
            table[(n - 1, 1)] = [(n, a)]
    elif v == 3:
        table[(1, n - 1)] = n
        table[(n - 1, 1)] = n
        table[(n - 1, n - 1)] = n
    else:
        table[(1, n - 1)] = n
        table[(n - 1, n - 1)] = n
    return make_algebra(n, table)


def degree_p_filiform(n: int, p: int) -> Algebra:
    """``mu_0^(n-p) + F^p`` with basis ``e1..e_{n-p}, f1..fp``."""
    FamilySpec(Family.DEGREE_P, n, p).validate()
    A = direct_sum(null_filiform(n - p), zero_algebra(p))
    labels = _labels(n - p) + [f"f{a}" for a in range(1, p + 1)]
    return Algebra(A.dim, A.products, tuple(labels))


def p_filiform_family(spec: FamilySpec) -> Algebra:
    """Naturally graded p-filiform algebra in the adapted basis ``e1..e_{n-p}, f1..fp``.

    The f-vectors are grouped into blocks: block k (k = 0..n-p-1) holds
    ``f_{S_k+1} .. f_{S_k+s_{k+1}}`` in degree k+1, where ``S_k = s_1+...+s_k``.
    Right multiplication by ``e_j`` moves the i-th vector of block k to the
    i-th vector of block k+j when that block is long enough, and kills it
    otherwise.  Block 0 is a source too; without it nothing in degree 1
    would generate the higher blocks.
    """
    spec.validate()
    m, p = spec.chain_length, spec.p
    f = lambda a: m + a  # noqa: E731  basis index of f_a
    table: dict = {key: {k: 1} for key, k in _chain(m, m).items()}
    for k in range(0, m - 1):
        for j in range(1, m - k):
            for i in range(1, spec.sv(k + j + 1) + 1):
                table[(f(spec.block_start(k) + i), j)] = {f(spec.block_start(k + j) + i): 1}
    for (i, j, k, t), (ecoef, fpart) in spec.b.items():
        terms = {}
        if ecoef:
            terms[k + t + 2] = ecoef
        base = spec.block_start(k + t + 1)
        for l, c in enumerate(fpart, 1):
            if c:
                terms[f(base + l)] = c
        if terms:
            table[(f(spec.block_start(k) + i), f(spec.block_start(t) + j))] = terms
    labels = _labels(m) + [f"f{a}" for a in range(1, p + 1)]
    return make_algebra(spec.n, table, labels)


def excluded_jordan_form(n: int, p: int) -> Algebra:
    """Left multiplication by ``e1`` in the second Jordan arrangement, all else zero.

    ``e1 e1 = 0``, ``e1 e_i = e_{i+1}`` (2 <= i <= n-p-1), ``e1 e_{n-p} = f1``.
    """
    m = n - p
    if p < 1 or m < 3:
        raise AlgebraError("the excluded arrangement needs p >= 1 and n - p >= 3")
    table = {(1, i): i + 1 for i in range(2, m)}
    table[(1, m)] = m + 1
    labels = _labels(m) + [f"f{a}" for a in range(1, p + 1)]
    return make_algebra(n, table, labels)


def build(spec: FamilySpec) -> Algebra:
    fam = spec.family
    if fam is Family.NULL_FILIFORM:
        return null_filiform(spec.n)
    if fam is Family.FILIFORM:
        return filiform_variant(spec.n, spec.variant)
    if fam is Family.QUASI:
        return quasi_filiform_variant(spec.n, spec.variant, spec.alpha)
    if fam is Family.DEGREE_P:
        return degree_p_filiform(spec.n, spec.p)
    return p_filiform_family(spec)


def _profiles(total: int, parts: int, cap: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _profiles(total - first, parts - 1, first):
            yield (first,) + rest


def main_family_specs(n_max: int, n_min: int = 1) -> list[FamilySpec]:
    """Every valid ``(n, p, s)`` of the main family with ``n_min <= n <= n_max`` and b empty."""
    specs = []
    for n in range(max(n_min, 1), n_max + 1):
        for p in range(2, n):
            m = n - p
            for s in _profiles(p, m, p - 1):
                if s and s[0] >= 1:
                    specs.append(FamilySpec(Family.P_FILIFORM_GRADED, n, p, s=s))
    return specs
