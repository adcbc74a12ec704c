import pytest

from pfiliform import (
    Family,
    FamilySpec,
    NotNaturallyGradedError,
    associativity_defects,
    check_homogeneous,
    degree_p_filiform,
    filiform_variant,
    gradation_positions,
    graded_structure,
    natural_graded_witness,
    natural_gradation,
    null_filiform,
    p_filiform_family,
    zero_algebra,
)
from pfiliform.catalog import main_family_specs
from pfiliform.grading import filtration_degrees
from pfiliform.theorems import s_profile_degrees

import oracles


def main(n, p, s):
    return p_filiform_family(FamilySpec(Family.P_FILIFORM_GRADED, n, p, s=s))


def test_natural_gradation_examples():
    assert natural_gradation(zero_algebra(4)).dims == (4,)
    assert natural_gradation(null_filiform(4)).dims == (1, 1, 1, 1)
    assert natural_gradation(main(7, 3, (2, 1, 0))).dims == (3, 2, 1, 1)


def test_components_reproduce_adapted_basis():
    A = main(7, 3, (2, 1, 0))
    labels = {v.index(1): A.labels[v.index(1)] for b in natural_gradation(A).bases for v in b}
    comps = [[A.labels[v.index(1)] for v in b] for b in natural_gradation(A).bases]
    assert comps == [["e1", "f1", "f2"], ["e2", "f3"], ["e3"], ["e4"]]
    assert len(labels) == 7


def _by_label(A):
    return {(A.labels[i - 1], A.labels[j - 1]): {A.labels[k - 1]: c for k, c in terms}
            for (i, j), terms in A.products.items()}


def test_graded_structure_of_graded_algebras_is_identity():
    for A in (zero_algebra(3), null_filiform(5)):
        assert graded_structure(A, natural_gradation(A)) == A
    # degree ordering moves the f-vectors between the e's; the table is unchanged
    A = main(8, 4, (2, 1, 1))
    gr = graded_structure(A, natural_gradation(A))
    assert gr.labels[:3] == ("e1", "f1", "f2")
    assert _by_label(gr) == _by_label(A)


def test_graded_structure_truncates_inhomogeneous_product():
    # mu_{1,2}^5: e5 e5 = e4 lands in degree 4, but e5 sits in degree 1
    A = filiform_variant(5, 2)
    gr = graded_structure(A, natural_gradation(A))
    assert gr.labels == ("e1", "e5", "e2", "e3", "e4")
    assert gr.basis_product(2, 2) == ()
    assert gr.basis_product(1, 1) == ((3, 1),)
    assert not check_homogeneous(A, filtration_degrees(A))
    assert associativity_defects(gr) == []
    assert oracles.power_dims(gr) == oracles.power_dims(A)


@pytest.mark.parametrize("A", [filiform_variant(6, 4), filiform_variant(7, 3), main(9, 4, (2, 1, 1))])
def test_graded_structure_preserves_associativity(A):
    assert associativity_defects(graded_structure(A, natural_gradation(A))) == []


def test_check_homogeneous_examples():
    assert check_homogeneous(zero_algebra(3), [1, 5, 2])
    assert check_homogeneous(null_filiform(6), list(range(1, 7)))
    assert not check_homogeneous(null_filiform(3), [1, 1, 1])


def test_natural_graded_witness_examples():
    assert natural_graded_witness(null_filiform(6), list(range(1, 7)))
    spec = FamilySpec(Family.P_FILIFORM_GRADED, 6, 2, s=(1, 1, 0))
    degrees = s_profile_degrees(spec)
    assert degrees == [1, 2, 3, 4, 1, 2]
    assert natural_graded_witness(p_filiform_family(spec), degrees)
    assert not natural_graded_witness(null_filiform(3), [1, 1, 2])


def test_positions_examples():
    A = degree_p_filiform(6, 2)
    assert gradation_positions(A, A.labels[:4], A.labels[4:]).r == (1, 1)
    A = main(7, 3, (2, 1, 0))
    assert gradation_positions(A, A.labels[:4], A.labels[4:]).r == (1, 1, 2)


def test_positions_reject_non_graded_basis():
    A = filiform_variant(6, 2)
    with pytest.raises(NotNaturallyGradedError):
        gradation_positions(A, A.labels[:5], A.labels[5:])


@pytest.mark.parametrize("spec", main_family_specs(8), ids=str)
def test_family_gradation_invariants(spec):
    A = p_filiform_family(spec)
    g = natural_gradation(A)
    assert sum(g.dims) == A.dim and g.dims[0] >= 1
    assert g.dims == tuple(x + 1 for x in spec.s)
    m = spec.chain_length
    r = gradation_positions(A, A.labels[:m], A.labels[m:]).r
    assert all(r_s <= s for s, r_s in enumerate(r, 1))
    prof = g.s_profile()
    assert all(a >= b for a, b in zip(prof, prof[1:])) and 0 <= prof[-1] and prof[0] < spec.p
