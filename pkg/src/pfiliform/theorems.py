"""Batch checks of the classification results at small dimension.

Each suite returns a :class:`SuiteResult`; ``run_all`` drives them for the
``verify-theorems`` command.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import annihilator_invariants, associativity_defects, nilindex, power_series
from .catalog import (
    Family,
    FamilySpec,
    build,
    excluded_jordan_form,
    filiform_variant,
    main_family_specs,
    null_filiform,
    p_filiform_family,
    quasi_filiform_variant,
)
from .charseq import CharacteristicSequence, char_seq_algebra
from .constraints import (
    associator_constraints,
    enumerate_solutions,
    excluded_form_constraints,
    grid_assignments,
    verify_solution,
)
from .grading import gradation_positions, natural_graded_witness, natural_gradation
from .io import emit_algebra, parse_algebra

QUASI_ALPHAS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))
SEEDS = (11, 29)
TRIALS = 100


@dataclass(frozen=True)
class SuiteResult:
    criterion: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.criterion}. {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def quasi_specs(n_max: int) -> list[FamilySpec]:
    specs = []
    for n in range(6, n_max + 1):
        for v in (1, 2, 3, 4):
            alphas = QUASI_ALPHAS if v == 2 else (None,)
            specs.extend(FamilySpec(Family.QUASI, n, variant=v, alpha=a) for a in alphas)
    return specs


def catalog_specs(n_max: int) -> list[FamilySpec]:
    specs = [FamilySpec(Family.NULL_FILIFORM, n) for n in range(1, n_max + 1)]
    specs += [FamilySpec(Family.FILIFORM, n, variant=v)
              for n in range(4, n_max + 1) for v in (1, 2, 3, 4)]
    specs += quasi_specs(n_max)
    specs += [FamilySpec(Family.DEGREE_P, n, p) for n in range(4, n_max + 1) for p in range(1, n - 2)]
    specs += main_family_specs(n_max)
    return specs


def describe(spec: FamilySpec) -> str:
    text = f"{spec.family.value}(n={spec.n}"
    if spec.family in (Family.DEGREE_P, Family.P_FILIFORM_GRADED):
        text += f", p={spec.p}"
    if spec.variant is not None:
        text += f", v={spec.variant}"
    if spec.alpha is not None:
        text += f", alpha={spec.alpha}"
    if spec.s:
        text += f", s={','.join(map(str, spec.s))}"
    return text + ")"


def _summary(failures: list, total: int) -> str:
    if not failures:
        return f"{total} instances"
    shown = "; ".join(failures[:4])
    more = f" (+{len(failures) - 4} more)" if len(failures) > 4 else ""
    return f"{len(failures)}/{total} failed: {shown}{more}"


def suite_associativity(n_max: int) -> SuiteResult:
    specs = catalog_specs(n_max)
    failures = [describe(s) for s in specs if associativity_defects(build(s))]
    return SuiteResult(1, "catalog associativity", not failures, _summary(failures, len(specs)))


def suite_null_filiform(n_max: int) -> SuiteResult:
    failures = []
    for n in range(1, n_max + 1):
        A = null_filiform(n)
        if nilindex(A) != n + 1 or power_series(A).dims != tuple(n + 1 - i for i in range(1, n + 2)):
            failures.append(f"n={n}")
    return SuiteResult(2, "null-filiform nilindex and series", not failures, _summary(failures, n_max))


def expected_char_seq(spec: FamilySpec) -> CharacteristicSequence:
    """The value stated for each family: (n), (n-1,1), (n-2,1,1), (n-p,1,...,1)."""
    p = {Family.NULL_FILIFORM: 0, Family.FILIFORM: 1, Family.QUASI: 2}.get(spec.family, spec.p)
    return CharacteristicSequence.p_filiform(spec.n, p)


def suite_char_seq(n_max: int) -> SuiteResult:
    specs = [FamilySpec(Family.NULL_FILIFORM, n) for n in range(1, n_max + 1)]
    specs += [FamilySpec(Family.FILIFORM, n, variant=v) for n in range(4, n_max + 1) for v in (1, 2, 3, 4)]
    specs += quasi_specs(n_max)
    specs += main_family_specs(n_max)
    failures = []
    for spec in specs:
        A = build(spec)
        got = [char_seq_algebra(A, TRIALS, seed) for seed in SEEDS]
        if got[0] != got[1] or got[0] != expected_char_seq(spec):
            failures.append(f"{describe(spec)} gave {got[0]}")
    return SuiteResult(3, "characteristic sequences", not failures, _summary(failures, len(specs)))


def s_profile_degrees(spec: FamilySpec) -> list[int]:
    """Degree of each adapted basis vector: e_i has degree i, block k has degree k+1."""
    degrees = list(range(1, spec.chain_length + 1))
    for k, size in enumerate(spec.s):
        degrees.extend([k + 1] * size)
    return degrees


def suite_grading(n_max: int) -> SuiteResult:
    specs = main_family_specs(n_max)
    failures = []
    for spec in specs:
        A = p_filiform_family(spec)
        dims = natural_gradation(A).dims
        if not natural_graded_witness(A, s_profile_degrees(spec)) or dims != tuple(x + 1 for x in spec.s):
            failures.append(describe(spec))
    return SuiteResult(4, "natural grading of the main family", not failures, _summary(failures, len(specs)))


def theorem_failures(spec: FamilySpec) -> list[str]:
    A = p_filiform_family(spec)
    m, p = spec.chain_length, spec.p
    problems = []
    r = gradation_positions(A, A.labels[:m], A.labels[m:]).r
    if any(r_s > s for s, r_s in enumerate(r, 1)):
        problems.append(f"r={r}")
    s = natural_gradation(A).s_profile()
    if not (all(a >= b for a, b in zip(s, s[1:])) and s[-1] >= 0 and s[0] < p):
        problems.append(f"s={s}")
    for i, j in itertools.product(range(1, spec.sv(1) + 1), repeat=2):
        if A.basis_product(m + i, m + j):
            problems.append(f"f{i}f{j}!=0")
    return problems


def suite_theorems(n_max: int) -> SuiteResult:
    specs = main_family_specs(n_max)
    failures = []
    for spec in specs:
        bad = theorem_failures(spec)
        if bad:
            failures.append(f"{describe(spec)}: {', '.join(bad)}")
    return SuiteResult(5, "r_s <= s, monotone s-profile, f_i f_j = 0", not failures,
                       _summary(failures, len(specs)))


def suite_excluded_form(n_max: int) -> SuiteResult:
    failures = []
    cases = [(n, p) for n in range(4, min(n_max, 6) + 1) for p in range(1, n - 2)]
    for n, p in cases:
        A = excluded_jordan_form(n, p)
        m = n - p
        if (1, 1, m - 1) not in associativity_defects(A) or not excluded_form_constraints(n, p).is_inconsistent():
            failures.append(f"n={n}, p={p}")
    return SuiteResult(6, "excluded Jordan arrangement is inconsistent", not failures,
                       _summary(failures, len(cases)))


CONSTRAINT_SPEC = FamilySpec(Family.P_FILIFORM_GRADED, 8, 4, s=(2, 2, 0, 0))


def suite_constraints(n_max: int = 0) -> SuiteResult:
    spec = CONSTRAINT_SPEC
    cs = associator_constraints(spec)
    grid = (Fraction(-1), Fraction(0), Fraction(1))
    solutions = enumerate_solutions(cs, grid)
    verified = [a for a in grid_assignments(cs, grid) if verify_solution(spec, a)]
    zero = {u: Fraction(0) for u in cs.unknowns}
    ok = bool(cs.unknowns) and solutions == verified and zero in solutions
    detail = (f"{describe(spec)}: {len(cs.unknowns)} unknowns, "
              f"{len(solutions)} of {len(grid) ** len(cs.unknowns)} grid points associative")
    return SuiteResult(7, "constraint solutions match the associativity oracle", ok, detail)


FILIFORM6_INVARIANTS = {
    # (commutator, left, right, two-sided); frozen from an independent sympy nullspace computation
    1: (0, 2, 2, 2),
    2: (0, 1, 1, 1),
    3: (1, 2, 2, 1),
    4: (1, 1, 1, 1),
}


def filiform_invariant_vector(v: int) -> tuple:
    inv = annihilator_invariants(filiform_variant(6, v))
    return (inv.commutator, inv.left, inv.right, inv.two_sided)


def suite_discrimination(n_max: int = 0) -> SuiteResult:
    vectors = {v: filiform_invariant_vector(v) for v in (1, 2, 3, 4)}
    ok = vectors == FILIFORM6_INVARIANTS and len(set(vectors.values())) == 4
    detail = ", ".join(f"mu_1,{v}: {vec}" for v, vec in vectors.items())
    return SuiteResult(8, "filiform classes separated by invariants", ok, detail)


def suite_round_trip(n_max: int) -> SuiteResult:
    specs = catalog_specs(n_max)
    failures = [describe(s) for s in specs if parse_algebra(emit_algebra(build(s))) != build(s)]
    probe = [null_filiform(5), filiform_variant(6, 4), quasi_filiform_variant(7, 3)]
    for A in probe:
        if [char_seq_algebra(A, 20, 5) for _ in range(2)] != [char_seq_algebra(A, 20, 5)] * 2:
            failures.append("sampling not reproducible")
    return SuiteResult(9, "JSON round trip and seeded determinism", not failures,
                       _summary(failures, len(specs)))


SUITES = (
    suite_associativity,
    suite_null_filiform,
    suite_char_seq,
    suite_grading,
    suite_theorems,
    suite_excluded_form,
    suite_constraints,
    suite_discrimination,
    suite_round_trip,
)


def run_all(n_max: int) -> list[SuiteResult]:
    return [suite(n_max) for suite in SUITES]
