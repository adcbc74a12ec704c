from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from pfiliform import (
    AlgebraError,
    annihilator_invariants,
    associativity_defects,
    direct_sum,
    filiform_variant,
    make_algebra,
    multiply,
    nilindex,
    null_filiform,
    power_series,
    zero_algebra,
)
from pfiliform.exact_linalg import unit_vector

import oracles


def e(n, i):
    return unit_vector(n, i)


def test_make_null_filiform_3():
    A = make_algebra(3, {(1, 1): 2, (1, 2): 3, (2, 1): 3})
    assert A == null_filiform(3)


def test_make_zero_product():
    A = make_algebra(2, {})
    assert A.is_zero_product() and A.dim == 2


@pytest.mark.parametrize("table", [
    {(1, 1): [(1, 0)]},
    {(1, 2): 1},
    {(1, 1): 2},
])
def test_make_algebra_validation(table):
    with pytest.raises(AlgebraError):
        make_algebra(1, table)


def test_multiply_examples():
    A = null_filiform(3)
    assert multiply(A, e(3, 1), e(3, 2)) == e(3, 3)
    assert multiply(A, (0, 0, 0), (1, 5, 7)) == (0, 0, 0)
    x = tuple(a + b for a, b in zip(e(3, 1), e(3, 2)))
    assert multiply(A, x, e(3, 1)) == (0, 1, 1)


def test_multiply_length_mismatch():
    with pytest.raises(AlgebraError):
        multiply(null_filiform(3), (1, 0), (1, 0, 0))


@pytest.mark.parametrize("n", range(3, 9))
def test_null_filiform_associative(n):
    assert associativity_defects(null_filiform(n)) == []


def test_zero_product_associative():
    assert associativity_defects(zero_algebra(4)) == []


def test_defect_detected():
    A = make_algebra(3, {(1, 1): 2, (2, 1): 3})
    defects = associativity_defects(A)
    assert (1, 1, 1) in defects
    assert defects == oracles.associator_defect_triples(A)


def test_power_series_examples():
    assert power_series(null_filiform(4)).dims == (4, 3, 2, 1, 0)
    assert power_series(zero_algebra(5)).dims == (5, 0)
    # frozen from oracles.power_dims
    assert power_series(filiform_variant(6, 1)).dims == (6, 4, 3, 2, 1, 0)


def test_power_series_uses_two_sided_sum():
    # one-sided A*A^i reaches zero here, but A^2 A^2 keeps e3 in every later power
    A = make_algebra(3, {(1, 1): 2, (2, 2): 3})
    series = power_series(A)
    assert series.dims == oracles.power_dims(A) == (3, 2, 1)
    assert not series.stabilized
    assert nilindex(A) is None


@pytest.mark.parametrize("n", range(1, 9))
def test_nilindex_null_filiform(n):
    assert nilindex(null_filiform(n)) == n + 1


def test_nilindex_trivial_cases():
    assert nilindex(zero_algebra(3)) == 2
    assert nilindex(make_algebra(1, {(1, 1): 1})) is None
    assert not power_series(make_algebra(1, {(1, 1): 1})).stabilized


def test_nilindex_counts_nonzero_terms():
    for A in (null_filiform(5), filiform_variant(7, 3), zero_algebra(2)):
        dims = power_series(A).dims
        assert nilindex(A) == 1 + sum(1 for d in dims if d)


def test_annihilators_zero_product():
    assert tuple(annihilator_invariants(zero_algebra(4))) == (4, 4, 4, 0)


@pytest.mark.parametrize("v", [1, 2, 3, 4])
def test_annihilators_match_oracle(v):
    A = filiform_variant(6, v)
    inv = annihilator_invariants(A)
    assert inv._asdict() == oracles.annihilator_dims(A)


def test_annihilator_examples():
    inv = annihilator_invariants(filiform_variant(6, 1))
    assert inv.two_sided == 2 and inv.commutator == 0
    assert annihilator_invariants(filiform_variant(6, 3)).commutator >= 1


def test_direct_sum():
    A = null_filiform(3)
    assert direct_sum(A, zero_algebra(0)) == A
    B = direct_sum(null_filiform(2), null_filiform(2))
    assert B.dim == 4
    assert B.products == {(1, 1): ((2, F(1)),), (3, 3): ((4, F(1)),)}
    for X, Y in [(null_filiform(3), null_filiform(5)), (filiform_variant(5, 2), zero_algebra(2))]:
        assert nilindex(direct_sum(X, Y)) == max(nilindex(X), nilindex(Y))
        assert power_series(direct_sum(X, Y)).dims == oracles.power_dims(direct_sum(X, Y))


vec5 = st.lists(st.integers(-4, 4), min_size=5, max_size=5)


@settings(max_examples=40, deadline=None)
@given(vec5, vec5, vec5)
def test_multiply_left_distributive(x, x2, y):
    A = filiform_variant(5, 4)
    lhs = multiply(A, [a + b for a, b in zip(x, x2)], y)
    rhs = [a + b for a, b in zip(multiply(A, x, y), multiply(A, x2, y))]
    assert list(lhs) == rhs


@pytest.mark.parametrize("A", [null_filiform(6), filiform_variant(7, 2), filiform_variant(6, 3)])
def test_series_strictly_decreasing(A):
    series = power_series(A)
    dims = series.dims
    assert all(a > b for a, b in zip(dims, dims[1:]))
    assert all(b <= a for a, b in zip(series.terms, series.terms[1:]))
