"""Natural gradation and graded structure.

The components A^i / A^(i+1) are realized as explicit complements.  Rebuilding
the table in that basis and dropping lower-order terms gives gr A; an algebra is
naturally graded when some basis has homogeneous products with the right
component sizes.
"""
from pfiliform import (
    Family,
    FamilySpec,
    build,
    graded_structure,
    natural_graded_witness,
    natural_gradation,
)
from pfiliform.grading import filtration_degrees

spec = FamilySpec(Family.P_FILIFORM_GRADED, 8, 4, s=(2, 1, 1))
A = build(spec)
g = natural_gradation(A)
print("component dims:", g.dims, " s-profile:", g.s_profile())

degrees = filtration_degrees(A)
print("degrees:", dict(zip(A.labels, degrees)))
print("witness in the presented basis:", natural_graded_witness(A, degrees))

gr = graded_structure(A, g)
print("gr A labels:", gr.labels)
print("gr A has the same number of products:", len(gr.products) == len(A.products))
