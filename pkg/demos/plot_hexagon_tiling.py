"""
Tiling the plane with discrete hexagons
=======================================

The set {0, 1, 3} in Z_7 is a B_2 set: its six pairwise sums are distinct.
Its kernel lattice packs the discrete triangle of side 2, and the very same
lattice tiles Z^2 with the 7-point hexagon.
"""

from simplex_sidon import AbelianGroup, classify_arrangement, is_bh_set, kernel_lattice
from simplex_sidon.render import render_svg

Z7 = AbelianGroup.cyclic(7)
B = [(0,), (1,), (3,)]
print("B_2 set:", bool(is_bh_set(Z7, B, 2)))

# lattice of all x with x1*1 + x2*3 = 0 in Z_7
L = kernel_lattice(Z7, [(1,), (3,)])
print("kernel lattice:", L.tolist())

# 6 triangle points fall in 6 of the 7 cosets: a packing, not a tiling
print("triangle:", classify_arrangement("simplex:n=2,h=2", L).outcome)
print("hexagon: ", classify_arrangement("diff:n=2,r=1,t=1", L).outcome)

with open("hexagon_tiling.svg", "w") as f:
    f.write(render_svg("diff:n=2,r=1,t=1", L, window=(-6, 6)))
print("wrote hexagon_tiling.svg")
