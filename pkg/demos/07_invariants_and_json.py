"""Isomorphism invariants and JSON interchange.

Annihilator and commutator dimensions separate the four filiform tables in
dimension 6.  Any algebra can be written to and read back from JSON exactly.
"""
from pfiliform import annihilator_invariants, emit_algebra, filiform_variant, parse_algebra, quasi_filiform_variant

for v in (1, 2, 3, 4):
    inv = annihilator_invariants(filiform_variant(6, v))
    print(f"mu_1,{v}^6: commutator {inv.commutator}, left {inv.left}, right {inv.right}, "
          f"two-sided {inv.two_sided}")

Q = quasi_filiform_variant(7, 2, "-1/2")
text = emit_algebra(Q, {"family": "quasi", "variant": 2, "alpha": "-1/2"})
print(text[:200] + "...")
print("round trip exact:", parse_algebra(text) == Q)
