"""
Smallest groups holding a B_h set
=================================

phi(h, n) is found by scanning sublattices of Z^n in increasing
determinant and stopping at the first one that packs the discrete simplex.
For n = 2 the answers follow 3r^2+3r+1 (h = 2r) and 3r^2 (h = 2r-1).
"""

from simplex_sidon import search_phi, search_psi
from simplex_sidon.bounds import phi_exact

for h in range(1, 9):
    cert = search_phi(h, 2)
    print(f"phi({h},2) = {cert.value:3d}  closed form {phi_exact(h, 2):3d}  "
          f"group {cert.group.factors}  set {cert.set}")

# three-dimensional case: the smallest group with a 4-element B_2 set
cert = search_phi(2, 3)
print("phi(2,3) =", cert.value, "lattice", cert.lattice.tolist())

# the covering side: largest group with a 3-element 2-basis
cert = search_psi(2, 2)
print("psi(2,2) =", cert.value, "basis", cert.set)
