"""Power series A^1 > A^2 > ... and the nilindex.

A^(i+1) is spanned by all products A^k A^(i+1-k).  The nilindex is the first
exponent at which the series reaches zero.
"""
from pfiliform import degree_p_filiform, filiform_variant, make_algebra, nilindex, null_filiform, power_series

for name, A in [
    ("mu_0^4", null_filiform(4)),
    ("mu_1,1^6", filiform_variant(6, 1)),
    ("mu_0^3 + F^2", degree_p_filiform(5, 2)),
]:
    s = power_series(A)
    print(f"{name:14} dims {s.dims}  nilindex {nilindex(A)}")

# A table where the series stalls before reaching zero.
stuck = make_algebra(3, {(1, 1): 2, (2, 2): 3})
s = power_series(stuck)
print(f"{'stalled':14} dims {s.dims}  stabilized={s.stabilized}  nilindex {nilindex(stuck)}")
