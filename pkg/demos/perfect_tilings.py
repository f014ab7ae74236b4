"""
Perfect B_h sets and tilings by difference bodies
=================================================

A lattice packs the simplex of side r + t exactly when it packs the
difference body of the r- and t-simplices.  When the body has as many
points as the lattice determinant, the packing is a tiling.
"""

from simplex_sidon import construct_tiling, search_tiling, shape_cardinality
from simplex_sidon.errors import NotFound

for r in range(1, 5):
    for t in (r - 1, r):
        cert = construct_tiling(2, r, t)
        print(f"(r, t) = ({r}, {t})  |body| = {shape_cardinality(cert.shape):3d}  "
              f"det = {cert.value:3d}  lattice {cert.lattice.tolist()}")

# the plus-shaped Lee sphere tiles too
print("cross:", search_tiling("cross:n=2,r=1").lattice.tolist())

# but the triangle of side 2 does not
try:
    search_tiling("simplex:n=2,h=2")
except NotFound as exc:
    print("no tiling by the side-2 triangle;", exc.checked, "lattices checked")
