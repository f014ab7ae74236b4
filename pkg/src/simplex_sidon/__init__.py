"""Sidon sets of order h and lattice packings / coverings of discrete simplices.

Exact integer arithmetic throughout.  The main entry points::

    from simplex_sidon import search_phi, construct_bh, is_bh_set, hnf

    cert = search_phi(4, 2)      # smallest group with a B_4 set of size 3
    cert.value                   # 19
"""
from .errors import *  # noqa: F401,F403
from .linalg import IntMatrix, Lattice, SnfResult, coset_reduce, hnf, snf
from .groups import (AbelianGroup, GroupProjection, element_combine, group_from_lattice,
                     is_cyclic)
from .shapes import PointSet, ShapeSpec, shape_cardinality, shape_points
from .verifiers import (Verdict, classify_arrangement, is_bh_set, is_bh_set_multiset,
                        is_generalized_basis, is_h_basis)
from .correspondence import (basis_to_covering, bh_to_packing, covering_to_basis,
                             discretize_lattice, kernel_lattice, packing_to_bh,
                             smallest_packing_h)
from .search import (Certificate, count_hnf, enumerate_hnf, search_phi, search_psi,
                     search_tiling, verify_certificate)
from .constructions import construct_bh, construct_tiling
from .bounds import BoundsTable, bounds_report, density, discrete_density_ratio

__version__ = "0.1.0"
