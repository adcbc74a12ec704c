"""Symbolic associators over unknown structure constants.

Unknown products are expanded as multivariate polynomials with exact rational
coefficients; every coefficient of every associator ``(xy)z - x(yz)`` on basis
triples must vanish.  Systems at this scale are tiny, so solving is done by
substituting forced linear values and then enumerating a finite grid.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .algebra import Algebra, associativity_defects
from .catalog import Family, FamilySpec, b_keys, excluded_jordan_form, p_filiform_family
from .errors import AlgebraError, BudgetExceededError
from .exact_linalg import as_scalar

DEFAULT_GRID = (Fraction(-1), Fraction(0), Fraction(1))
DEFAULT_BUDGET = 10 ** 6


class Unknown(NamedTuple):
    family: str  # "b" for main-family coefficients, "c" for free structure constants
    index: tuple

    def __str__(self):
        if self.family == "b":
            k, t, i, j, l = self.index
            inner = f"{i},{j}" if l == 0 else f"{i},{j},{l}"
            return f"b[{inner};{k},{t}]"
        return f"{self.family}[{','.join(map(str, self.index))}]"


def b_unknown(i: int, j: int, k: int, t: int, l: int = 0) -> Unknown:
    """``l = 0`` is the e-component, ``l >= 1`` the l-th f-component."""
    return Unknown("b", (k, t, i, j, l))


def _monomial_key(mono: tuple):
    return (-len(mono), mono)


class Poly:
    """Sparse polynomial: ``{sorted tuple of Unknowns: Fraction}``, no zero terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls({(): as_scalar(c)})

    @classmethod
    def var(cls, u: Unknown) -> "Poly":
        return cls({(u,): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_scalar(other)
            return Poly({m: c * d for m, d in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def unknowns(self) -> set:
        return {u for m in self.terms for u in m}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def evaluate(self, assignment: Mapping) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            for u in m:
                c = c * assignment[u]
            total += c
        return total

    def substitute(self, u: Unknown, value: Fraction) -> "Poly":
        out: dict = {}
        for m, c in self.terms.items():
            rest = tuple(x for x in m if x != u)
            c = c * value ** (len(m) - len(rest))
            out[rest] = out.get(rest, 0) + c
        return Poly(out)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        lead = min(self.terms, key=_monomial_key)
        return self * (1 / self.terms[lead])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_monomial_key):
            c = self.terms[m]
            body = "*".join(str(u) for u in m)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


@dataclass(frozen=True)
class ConstraintSystem:
    unknowns: tuple
    equations: tuple  # Polys that must vanish

    def __post_init__(self):
        declared = set(self.unknowns)
        for eq in self.equations:
            if not eq.unknowns() <= declared:
                raise AlgebraError("equation uses an undeclared unknown")

    def is_inconsistent(self) -> bool:
        """True when some equation is a nonzero constant."""
        return any(eq.is_constant() and eq for eq in self.equations)

    def satisfied_by(self, assignment: Mapping) -> bool:
        return all(eq.evaluate(assignment) == 0 for eq in self.equations)

    def report(self) -> dict:
        return {
            "unknowns": [str(u) for u in self.unknowns],
            "equations": [str(eq) for eq in self.equations],
            "max_degree": max((eq.degree for eq in self.equations), default=0),
            "inconsistent": self.is_inconsistent(),
        }


SymbolicTable = dict  # (i, j) -> {k: Poly}


def lift(A: Algebra) -> SymbolicTable:
    return {key: {k: Poly.constant(c) for k, c in terms} for key, terms in A.products.items()}


def _times_basis(table: SymbolicTable, vec: Mapping, k: int, left: bool) -> dict:
    out: dict = {}
    for m, c in vec.items():
        for r, d in table.get((m, k) if left else (k, m), {}).items():
            out[r] = out.get(r, Poly()) + c * d
    return out


def associator_system(dim: int, table: SymbolicTable, unknowns: Sequence[Unknown]) -> ConstraintSystem:
    """Coefficients of ``(e_a e_b) e_c - e_a (e_b e_c)`` for all basis triples."""
    seen = set()
    equations = []
    for a, b, c in itertools.product(range(1, dim + 1), repeat=3):
        lhs = _times_basis(table, table.get((a, b), {}), c, left=True)
        rhs = _times_basis(table, table.get((b, c), {}), a, left=False)
        for k in sorted(set(lhs) | set(rhs)):
            eq = (lhs.get(k, Poly()) - rhs.get(k, Poly())).monic()
            if eq and eq not in seen:
                seen.add(eq)
                equations.append(eq)
    return ConstraintSystem(tuple(unknowns), tuple(equations))


def symbolic_family_table(spec: FamilySpec) -> tuple[SymbolicTable, list]:
    """The main-family table with every admissible b-coefficient left as an unknown."""
    if spec.family is not Family.P_FILIFORM_GRADED:
        raise AlgebraError("symbolic b-coefficients exist only for the p-filiform family")
    base = replace(spec, b={})
    table = lift(p_filiform_family(base))
    m = spec.chain_length
    unknowns = []
    for i, j, k, t in b_keys(spec):
        left = m + spec.block_start(k) + i
        right = m + spec.block_start(t) + j
        entry = table.setdefault((left, right), {})
        u = b_unknown(i, j, k, t)
        unknowns.append(u)
        entry[k + t + 2] = entry.get(k + t + 2, Poly()) + Poly.var(u)
        top = spec.block_start(k + t + 1)
        for l in range(1, spec.sv(k + t + 2) + 1):
            u = b_unknown(i, j, k, t, l)
            unknowns.append(u)
            idx = m + top + l
            entry[idx] = entry.get(idx, Poly()) + Poly.var(u)
    return table, unknowns


def associator_constraints(spec: FamilySpec) -> ConstraintSystem:
    """Polynomial conditions on the b-coefficients for ``p_filiform_family(spec)`` to be associative."""
    spec.validate()
    table, unknowns = symbolic_family_table(spec)
    return associator_system(spec.n, table, unknowns)


def excluded_form_constraints(n: int, p: int) -> ConstraintSystem:
    """Fix left multiplication by ``e1`` to the excluded Jordan arrangement and
    leave every other product as free unknowns."""
    fixed = lift(excluded_jordan_form(n, p))
    table: SymbolicTable = {key: v for key, v in fixed.items() if key[0] == 1}
    unknowns = []
    for i in range(2, n + 1):
        for j in range(1, n + 1):
            entry = {}
            for k in range(1, n + 1):
                u = Unknown("c", (i, j, k))
                unknowns.append(u)
                entry[k] = Poly.var(u)
            table[(i, j)] = entry
    return associator_system(n, table, unknowns)


def _forced_values(cs: ConstraintSystem):
    """Substitute single-unknown linear equations until none are left.

    Returns ``(fixed, equations)`` or None when a contradiction appears.
    """
    fixed: dict = {}
    equations = list(cs.equations)
    changed = True
    while changed:
        changed = False
        for eq in equations:
            if eq.is_constant():
                if eq:
                    return None
                continue
            names = eq.unknowns()
            if len(names) == 1 and eq.degree == 1:
                (u,) = names
                coef = eq.terms[(u,)]
                value = -eq.terms.get((), Fraction(0)) / coef
                fixed[u] = value
                equations = [e.substitute(u, value) for e in equations]
                changed = True
                break
    return fixed, [e for e in equations if e]


def enumerate_solutions(cs: ConstraintSystem, values: Iterable = DEFAULT_GRID,
                        budget: int = DEFAULT_BUDGET) -> list[dict]:
    """All assignments with every unknown drawn from ``values`` that satisfy ``cs``."""
    grid = tuple(dict.fromkeys(as_scalar(v) for v in values))
    pre = _forced_values(cs)
    if pre is None:
        return []
    fixed, rest = pre
    if any(v not in grid for v in fixed.values()):
        return []
    free = [u for u in cs.unknowns if u not in fixed]
    if len(grid) ** len(free) > budget:
        raise BudgetExceededError(
            f"{len(grid)}^{len(free)} grid points exceed the budget of {budget}")
    solutions = []
    for combo in itertools.product(grid, repeat=len(free)):
        assignment = dict(fixed)
        assignment.update(zip(free, combo))
        if all(eq.evaluate(assignment) == 0 for eq in rest):
            solutions.append({u: assignment[u] for u in cs.unknowns})
    return solutions


def grid_assignments(cs: ConstraintSystem, values: Iterable = DEFAULT_GRID) -> list[dict]:
    grid = tuple(dict.fromkeys(as_scalar(v) for v in values))
    return [dict(zip(cs.unknowns, combo))
            for combo in itertools.product(grid, repeat=len(cs.unknowns))]


def assignment_to_b(assignment: Mapping) -> dict:
    """Group b-unknown values into the ``(i, j, k, t) -> (e, (f_1, ...))`` map of a FamilySpec."""
    grouped: dict = {}
    for u, value in assignment.items():
        if u.family != "b":
            raise AlgebraError(f"{u} is not a b-coefficient")
        k, t, i, j, l = u.index
        grouped.setdefault((i, j, k, t), {})[l] = as_scalar(value)
    out = {}
    for key, parts in grouped.items():
        width = max(parts)
        out[key] = (parts.get(0, Fraction(0)),
                    tuple(parts.get(l, Fraction(0)) for l in range(1, width + 1)))
    return out


def verify_solution(spec: FamilySpec, assignment: Mapping) -> bool:
    """Instantiate the family with the assignment and check associativity numerically."""
    missing = set(b_unknowns(spec)) - set(assignment)
    if missing:
        raise AlgebraError(f"assignment misses {sorted(map(str, missing))}")
    A = p_filiform_family(replace(spec, b=assignment_to_b(assignment)))
    return not associativity_defects(A)


def b_unknowns(spec: FamilySpec) -> list:
    return symbolic_family_table(spec)[1]
