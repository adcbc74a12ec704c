"""Characteristic sequences by seeded sampling.

For x outside A^2 the left multiplication z -> xz is nilpotent; its Jordan block
sizes, sorted decreasingly, form a sequence.  The characteristic sequence is the
lexicographic maximum over such x.  Sampling uses every basis vector outside A^2
plus seeded random rational combinations, so results are reproducible.
"""
from pfiliform import (
    FamilySpec,
    Family,
    build,
    char_seq_algebra,
    char_seq_element,
    filiform_variant,
    null_filiform,
    quasi_filiform_variant,
)

A = filiform_variant(6, 1)
print("L_e1 on mu_1,1^6:", char_seq_element(A, A.basis_vector(1)))
print("C(mu_0^6)      =", char_seq_algebra(null_filiform(6), trials=100, seed=0))
print("C(mu_1,1^6)    =", char_seq_algebra(A, trials=100, seed=0))

main = build(FamilySpec(Family.P_FILIFORM_GRADED, 7, 3, s=(2, 1)))
print("C(main n=7 p=3) =", char_seq_algebra(main, trials=100, seed=0))

# The quasi-filiform tables split by variant.  Variant 1 gives (n-2,1,1).  In the
# other variants e1 e_{n-1} = e_n puts a second 2-block into L_e1.
for v in (1, 2, 3, 4):
    Q = quasi_filiform_variant(7, v, 0 if v == 2 else None)
    print(f"C(mu_2,{v}^7)    =", char_seq_algebra(Q, trials=100, seed=11),
          " L_e1:", char_seq_element(Q, Q.basis_vector(1)))
