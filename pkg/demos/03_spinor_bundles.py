"""Chern classes of spinor bundles and their numerical dimension."""
from ulrich_chern.bundles import nu
from ulrich_chern.spinor import spinor_chern, spinor_identities_check, spinor_nu_table, ulrich_spinor

E = spinor_chern(10, "sprime")
for i in range(1, 11):
    print(f"c{i}(S') on Q10 =", E.c(i).to_dict())

print()
print("(n, nu) of the Ulrich spinor bundles:")
for n, v in spinor_nu_table(2, 16):
    print(f"  Q{n}: {v}")

# S(1) on Q9 is big: nu hits n + r - 1
print("nu(S(1)) on Q9 =", nu(ulrich_spinor(9, "s")))

print()
print(spinor_identities_check(10).to_markdown())
