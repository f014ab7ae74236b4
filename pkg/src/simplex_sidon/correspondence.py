"""Translations between additive sets in finite Abelian groups and lattice arrangements.

* A B_h set {0, b_1, ..., b_n} in G gives the kernel lattice
  L = {x : sum x_i b_i = 0}, and (simplex_h, L) is a packing of Z^n.
* A packing (simplex_h, L) gives the B_h set {[0], [e_1], ..., [e_n]} in Z^n / L.
* The same two maps relate h-bases and coverings.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Sequence

from .errors import (DegenerateRounding, NotABhSet, NotACovering, NotAnHBasis, NotAPacking,
                     NotGenerating, SingularBasis)
from .groups import AbelianGroup, group_from_lattice
from .linalg import IntMatrix, Lattice, hnf, rational_det
from .shapes import ShapeSpec, shape_points
from .verifiers import Verdict, classify_arrangement, is_bh_set, is_h_basis


def kernel_lattice(group: AbelianGroup, elems: Sequence[Sequence[int]],
                   strict: bool = False) -> Lattice:
    """{x in Z^n : sum x_i elems_i = 0}.

    The relation matrix [[I_n, M], [0, D]] (M has the elements as rows, D is
    the diagonal of invariant factors) is put in HNF.  Its last k columns are
    eliminated first, so the top-left n x n block generates the kernel.

    With ``strict`` a ``NotGenerating`` error is raised when the elements do
    not generate the whole group (det of the kernel is then the order of the
    generated subgroup).
    """
    elems = [group.check(tuple(e)) for e in elems]
    n, k = len(elems), group.rank
    rows = [[int(i == j) for j in range(n)] + list(e) for i, e in enumerate(elems)]
    rows += [[0] * n + [group.factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
    full = hnf(rows).hnf.rows
    lattice = Lattice(IntMatrix(r[:n] for r in full[:n]))
    if strict and lattice.det != group.order:
        raise NotGenerating(
            f"elements generate a subgroup of order {lattice.det} in a group of order {group.order}")
    return lattice


def _translate(group: AbelianGroup, elems):
    elems = [group.check(tuple(e)) for e in elems]
    return [group.sub(e, elems[0]) for e in elems[1:]]


def bh_to_packing(group: AbelianGroup, elems, h: int) -> tuple[Lattice, Verdict]:
    """Kernel lattice of a B_h set together with its (packing) classification."""
    check = is_bh_set(group, elems, h)
    if not check:
        raise NotABhSet("not a B_h set", check)
    gens = _translate(group, elems)
    lattice = kernel_lattice(group, gens)
    verdict = classify_arrangement(ShapeSpec.simplex(len(gens), h), lattice)
    verdict.info["generating"] = lattice.det == group.order
    if not verdict.packing:
        raise AssertionError(f"B_h set produced a non-packing lattice: {verdict.to_json()}")
    return lattice, verdict


def basis_to_covering(group: AbelianGroup, elems, h: int) -> tuple[Lattice, Verdict]:
    check = is_h_basis(group, elems, h)
    if not check:
        raise NotAnHBasis("not an h-basis", check)
    gens = _translate(group, elems)
    lattice = kernel_lattice(group, gens)
    verdict = classify_arrangement(ShapeSpec.simplex(len(gens), h), lattice)
    verdict.info["generating"] = lattice.det == group.order
    if not verdict.covering:
        raise AssertionError(f"h-basis produced a non-covering lattice: {verdict.to_json()}")
    return lattice, verdict


def _unit_images(lattice: Lattice):
    group, proj = group_from_lattice(lattice)
    elems = [group.zero()] + list(proj.images)
    return group, elems


def packing_to_bh(lattice: Lattice, h: int):
    """Z^n / L together with {[0], [e_1], ..., [e_n]} and its B_h verdict.

    The set is returned in the order 0, e_1, ..., e_n.  ``verdict.info``
    records the number of distinct elements.
    """
    arrangement = classify_arrangement(ShapeSpec.simplex(lattice.n, h), lattice)
    if not arrangement.packing:
        raise NotAPacking("lattice does not pack the simplex", arrangement)
    group, elems = _unit_images(lattice)
    verdict = is_bh_set(group, elems, h)
    verdict.info["cardinality"] = len(set(elems))
    return group, elems, verdict


def covering_to_basis(lattice: Lattice, h: int):
    """Z^n / L with the h-basis of distinct cosets among [0], [e_1], ..., [e_n]."""
    arrangement = classify_arrangement(ShapeSpec.simplex(lattice.n, h), lattice)
    if not arrangement.covering:
        raise NotACovering("lattice does not cover Z^n with the simplex", arrangement)
    group, elems = _unit_images(lattice)
    distinct = list(dict.fromkeys(elems))
    verdict = is_h_basis(group, distinct, h)
    verdict.info["cardinality"] = len(distinct)
    return group, distinct, verdict


def round_half_up(x: Fraction) -> int:
    return floor(x + Fraction(1, 2))


def discretize_lattice(basis, h: int, eps) -> tuple[Lattice, Verdict]:
    """Round a rational basis to (1/h)Z^n, scale by h, and test the shrunken simplex.

    The point set is (1 - eps) h * simplex intersected with Z^n, i.e. the
    discrete simplex of sidelength floor((1 - eps) h).  Ties round upward.
    ``verdict.info["density"]`` is |S| / det as a string fraction.
    """
    V = [[Fraction(v) for v in row] for row in basis]
    eps = Fraction(eps)
    if h < 1:
        raise ValueError("h must be >= 1")
    if not 0 <= eps < 1:
        raise ValueError("eps must lie in [0, 1)")
    if any(len(r) != len(V) for r in V):
        raise ValueError("basis must be square")
    if rational_det(V) == 0:
        raise SingularBasis("rational basis is singular")
    rounded = [[round_half_up(v * h) for v in row] for row in V]
    try:
        lattice = hnf(rounded)
    except SingularBasis as exc:
        raise DegenerateRounding(f"rounded basis {rounded} is singular") from exc
    side = floor((1 - eps) * h)
    shape = ShapeSpec.simplex(len(V), side)
    verdict = classify_arrangement(shape_points(shape), lattice)
    verdict.info["density"] = str(Fraction(verdict.info["size"], lattice.det))
    verdict.info["sidelength"] = side
    verdict.info["rounded_basis"] = rounded
    return lattice, verdict


def smallest_packing_h(basis, eps, h_max: int):
    """Smallest h <= h_max whose discretization packs, or None."""
    for h in range(1, h_max + 1):
        try:
            lattice, verdict = discretize_lattice(basis, h, eps)
        except DegenerateRounding:
            continue
        if verdict.packing:
            return h, lattice, verdict
    return None
