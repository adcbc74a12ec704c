"""The main p-filiform family and gradation positions.

The basis is e1..e_m followed by f-blocks; block k sits in degree k+1 and has
s_(k+1) vectors.  f-vectors are pushed up one block at a time by right
multiplication with e_j.
"""
from pfiliform import Family, FamilySpec, associativity_defects, gradation_positions, main_family_specs, p_filiform_family

spec = FamilySpec(Family.P_FILIFORM_GRADED, 6, 3, s=(2, 1, 0))
A = p_filiform_family(spec)
print("n=6 p=3 s=(2,1,0):")
print("\n".join("  " + line for line in A.table_lines()))

m = spec.chain_length
r = gradation_positions(A, A.labels[:m], A.labels[m:]).r
print("positions r:", r, " r_s <= s:", all(x <= s for s, x in enumerate(r, 1)))

specs = main_family_specs(9)
bad = [s for s in specs if associativity_defects(p_filiform_family(s))]
print(f"{len(specs)} admissible (n, p, s) with n <= 9; non-associative: {len(bad)}")
