"""Associativity as polynomial constraints.

The b-coefficients of the main family are left symbolic.  Expanding every
associator on basis triples gives polynomial equations; a finite grid search then
lists the admissible values, cross-checked against a direct associativity test.
"""
from pfiliform import Family, FamilySpec, associator_constraints, enumerate_solutions, verify_solution
from pfiliform.constraints import excluded_form_constraints, grid_assignments

spec = FamilySpec(Family.P_FILIFORM_GRADED, 8, 4, s=(2, 2))
cs = associator_constraints(spec)
print("unknowns:", ", ".join(map(str, cs.unknowns)))
print("equations:", ", ".join(f"{e} = 0" for e in cs.equations))

sols = enumerate_solutions(cs)
direct = [a for a in grid_assignments(cs) if verify_solution(spec, a)]
print(f"grid solutions: {len(sols)}; agree with direct check: {sols == direct}")

# Each f in block 1 is f' e1, so (f' e1) f = f' (e1 f) = 0 kills every b.
graded = associator_constraints(FamilySpec(Family.P_FILIFORM_GRADED, 9, 4, s=(2, 2), ansatz="graded"))
print("graded ansatz equations:", [str(e) for e in graded.equations])

# Placing e1 e_m = f1 instead of a long e-chain contradicts associativity.
ex = excluded_form_constraints(5, 1)
print(f"excluded arrangement: {len(ex.equations)} equations, inconsistent={ex.is_inconsistent()}")
