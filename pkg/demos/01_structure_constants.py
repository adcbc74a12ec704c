"""Algebras as tables of structure constants.

An algebra is stored as a sparse map (i, j) -> e_i e_j.  This walk-through builds
a few small tables by hand, multiplies elements and checks associativity.
"""
from fractions import Fraction

from pfiliform import associativity_defects, direct_sum, make_algebra, multiply, null_filiform

# The 3-dimensional null-filiform table: e1e1 = e2, e1e2 = e2e1 = e3.
A = make_algebra(3, {(1, 1): 2, (1, 2): 3, (2, 1): 3})
print("table of A:")
print("\n".join("  " + line for line in A.table_lines()))
assert A == null_filiform(3)

x = (1, Fraction(1, 2), 0)
print("x = e1 + 1/2 e2,  x*x =", " ".join(str(c) for c in multiply(A, x, x)))
print("associativity defects of A:", associativity_defects(A))

# A table that is not associative: e1e1 = e2, e2e2 = e3 but nothing else.
B = make_algebra(3, {(1, 1): 2, (2, 2): 3})
print("defects of e1e1=e2, e2e2=e3:", associativity_defects(B)[:3], "...")

# Direct sums keep the blocks apart: every cross product is zero.
C = direct_sum(null_filiform(2), null_filiform(2))
print("mu_0^2 + mu_0^2 has", len(C.products), "nonzero products; labels", C.labels)
