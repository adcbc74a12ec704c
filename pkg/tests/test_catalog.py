from fractions import Fraction as F

import pytest

from pfiliform import (
    AlgebraError,
    CharacteristicSequence as CS,
    Family,
    FamilySpec,
    associativity_defects,
    char_seq_algebra,
    degree_p_filiform,
    excluded_jordan_form,
    filiform_variant,
    gradation_positions,
    nilindex,
    null_filiform,
    p_filiform_family,
    power_series,
    quasi_filiform_variant,
)
from pfiliform.catalog import b_keys, main_family_specs

import oracles


def spec(n, p, s, **kw):
    return FamilySpec(Family.P_FILIFORM_GRADED, n, p, s=s, **kw)


def by_label(A):
    return {(A.labels[i - 1], A.labels[j - 1]): {A.labels[k - 1]: c for k, c in terms}
            for (i, j), terms in A.products.items()}


def test_null_filiform_examples():
    assert null_filiform(1).is_zero_product()
    assert by_label(null_filiform(3)) == {("e1", "e1"): {"e2": 1}, ("e1", "e2"): {"e3": 1},
                                          ("e2", "e1"): {"e3": 1}}
    A = null_filiform(6)
    assert nilindex(A) == 7
    assert char_seq_algebra(A, 20, 0) == CS((6,))


@pytest.mark.parametrize("n", range(1, 9))
def test_null_filiform_series(n):
    assert power_series(null_filiform(n)).dims == tuple(n + 1 - i for i in range(1, n + 2))


def test_filiform_examples():
    base = by_label(filiform_variant(5, 1))
    assert base == by_label(null_filiform(4)) | {}  # e5 is isolated
    assert by_label(filiform_variant(5, 2)) == base | {("e5", "e5"): {"e4": 1}}
    A = filiform_variant(6, 4)
    extra = {k: v for k, v in by_label(A).items() if k not in by_label(filiform_variant(6, 1))}
    assert extra == {("e1", "e6"): {"e5": 1}, ("e6", "e6"): {"e5": 1}}
    assert associativity_defects(A) == oracles.associator_defect_triples(A) == []


@pytest.mark.parametrize("n, v", [(3, 1), (5, 0), (5, 5)])
def test_filiform_validation(n, v):
    with pytest.raises(AlgebraError):
        filiform_variant(n, v)


@pytest.mark.parametrize("n", range(5, 9))
@pytest.mark.parametrize("v", [1, 2, 3, 4])
def test_filiform_invariants(n, v):
    A = filiform_variant(n, v)
    dims = power_series(A).dims
    assert all(dims[i - 1] == n - i for i in range(2, n + 1))
    assert char_seq_algebra(A, 30, 4) == CS((n - 1, 1))


def test_quasi_examples():
    A = quasi_filiform_variant(7, 1)
    assert by_label(A)[("e6", "e1")] == {"e7": 1}
    B = quasi_filiform_variant(7, 2, 0)
    assert by_label(B)[("e1", "e6")] == {"e7": 1}
    assert ("e6", "e1") not in by_label(B)
    assert by_label(quasi_filiform_variant(7, 2, F(1, 2)))[("e6", "e1")] == {"e7": F(1, 2)}
    C = quasi_filiform_variant(8, 3)
    assert associativity_defects(C) == oracles.associator_defect_triples(C) == []


@pytest.mark.parametrize("args", [(5, 1, None), (7, 2, None), (7, 1, 1), (7, 5, None)])
def test_quasi_validation(args):
    with pytest.raises(AlgebraError):
        quasi_filiform_variant(*args)


def test_degree_p_examples():
    A = degree_p_filiform(5, 2)
    assert power_series(A).dims == oracles.power_dims(A) == (5, 2, 1, 0)
    for p in range(1, 5):
        B = degree_p_filiform(p + 3, p)
        assert by_label(B) == by_label(null_filiform(3))
        assert B.labels[3:] == tuple(f"f{a}" for a in range(1, p + 1))
    C = degree_p_filiform(6, 2)
    assert gradation_positions(C, C.labels[:4], C.labels[4:]).r == (1, 1)
    with pytest.raises(AlgebraError):
        degree_p_filiform(4, 2)


def test_main_family_k0_extension():
    A = p_filiform_family(spec(6, 3, (2, 1, 0)))
    table = by_label(A)
    assert table[("f1", "e1")] == {"f3": 1}
    assert table[("e1", "e1")] == {"e2": 1}
    assert table[("e1", "e2")] == {"e3": 1}
    assert ("f2", "e1") not in table
    assert associativity_defects(A) == []


def test_p_equal_one_profile_is_rejected_and_covered_by_degree_p():
    with pytest.raises(AlgebraError):
        p_filiform_family(spec(5, 1, (1, 0, 0, 0)))
    # the r_i = 1 boundary case is the degree-p algebra, here mu_{1,1}^5
    assert degree_p_filiform(5, 1).products == filiform_variant(5, 1).products


@pytest.mark.parametrize("bad", [
    dict(s=(3, 0)),          # s_1 = p
    dict(s=(1, 2)),          # not monotone
    dict(s=(1, 1)),          # wrong sum
    dict(s=(2, 0, 0, 0, 1)),  # too long
])
def test_main_family_profile_validation(bad):
    with pytest.raises(AlgebraError):
        p_filiform_family(spec(7, 3, **bad) if "s" in bad else spec(7, 3, (2, 1)))


def test_main_family_b_validation():
    with pytest.raises(AlgebraError):  # k + t != n - p - 2
        p_filiform_family(spec(9, 4, (2, 2), b={(1, 1, 1, 1): 1}))
    with pytest.raises(AlgebraError):  # i outside the tail range of block k
        p_filiform_family(spec(7, 3, (2, 1), b={(2, 1, 1, 1): 1}))
    with pytest.raises(AlgebraError):  # s_{n-p} = 0 leaves no f-components
        p_filiform_family(spec(7, 3, (2, 1), b={(1, 1, 1, 1): (1, [1])}))
    A = p_filiform_family(spec(7, 3, (2, 1), b={(1, 1, 1, 1): 2}))
    assert by_label(A)[("f3", "f3")] == {"e4": 2}


def test_b_keys_follow_index_ranges():
    assert b_keys(spec(8, 4, (2, 1, 1, 0))) == []
    assert b_keys(spec(8, 4, (2, 2))) == [(1, 1, 1, 1), (1, 2, 1, 1), (2, 1, 1, 1), (2, 2, 1, 1)]
    assert b_keys(spec(10, 6, (2, 2, 1, 1))) == [(2, 2, 1, 1)]
    assert b_keys(spec(9, 4, (2, 2), ansatz="graded")) == [(1, 1, 1, 1), (1, 2, 1, 1), (2, 1, 1, 1), (2, 2, 1, 1)]


MAIN = main_family_specs(9)


@pytest.mark.parametrize("sp", MAIN, ids=lambda s: f"n{s.n}p{s.p}s{''.join(map(str, s.s))}")
def test_main_family_properties(sp):
    A = p_filiform_family(sp)
    assert associativity_defects(A) == []
    m = sp.chain_length
    # f_{S_k+i} e_j is nonzero exactly when i <= s_{k+j+1}
    for k in range(0, m - 1):
        for j in range(1, m - k + 1):
            for i in range(1, sp.sv(k + 1) + 1):
                prod = A.basis_product(m + sp.block_start(k) + i, j)
                if i <= sp.sv(k + j + 1):
                    assert prod == ((m + sp.block_start(k + j) + i, 1),)
                else:
                    assert prod == ()
    for i in range(1, sp.sv(1) + 1):
        for j in range(1, sp.sv(1) + 1):
            assert A.basis_product(m + i, m + j) == ()


@pytest.mark.parametrize("sp", [s for s in MAIN if s.n <= 7], ids=lambda s: f"n{s.n}p{s.p}")
def test_main_family_is_p_filiform(sp):
    assert char_seq_algebra(p_filiform_family(sp), 40, 8) == CS.p_filiform(sp.n, sp.p)


def test_main_family_sweep_size():
    # partitions of p into at most n-p parts, largest part below p, for 4 <= n <= 9
    assert len(MAIN) == 51
    assert {(s.n, s.p) for s in MAIN if s.n == 4} == {(4, 2)}


@pytest.mark.parametrize("n, p", [(4, 1), (5, 1), (5, 2), (6, 3), (7, 2)])
def test_excluded_jordan_form_breaks_associativity(n, p):
    A = excluded_jordan_form(n, p)
    m = n - p
    assert by_label(A)[("e1", f"e{m}")] == {"f1": 1}
    # (e1 e1) e_{m-1} = 0 while e1 (e1 e_{m-1}) = f1
    assert (1, 1, m - 1) in associativity_defects(A)


def test_excluded_form_needs_room():
    with pytest.raises(AlgebraError):
        excluded_jordan_form(4, 2)
