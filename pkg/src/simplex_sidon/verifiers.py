"""Decide B_h / h-basis / generalized-basis membership and classify arrangements.

Every negative verdict carries a witness that can be re-checked with
``element_combine`` or ``coset_reduce``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Any, Sequence

from .errors import CardinalityOverflow, DimensionMismatch
from .groups import AbelianGroup
from .linalg import Lattice, coset_reduce
from .shapes import PointSet, ShapeSpec, shape_points, simplex_points

DEFAULT_ENUMERATION_BUDGET = 10**7

PACKING_ONLY = "packing-only"
COVERING_ONLY = "covering-only"
TILING = "tiling"
NEITHER = "neither"


@dataclass
class Verdict:
    """Outcome of a check.

    ``outcome`` is a bool for set properties and one of the four
    classification strings for arrangements.
    """

    outcome: Any
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.outcome is True or self.outcome == TILING

    @property
    def packing(self) -> bool:
        return self.outcome in (PACKING_ONLY, TILING)

    @property
    def covering(self) -> bool:
        return self.outcome in (COVERING_ONLY, TILING)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"outcome": self.outcome}
        if self.witness is not None:
            out["witness"] = self.witness
        out.update(self.info)
        return out


def enumeration_budget() -> int:
    return int(os.environ.get("SIMPLEX_SIDON_ENUM_BUDGET", DEFAULT_ENUMERATION_BUDGET))


def _normalize(group: AbelianGroup, elems: Sequence[Sequence[int]]):
    """Check membership and translate so the first element is 0."""
    if not elems:
        raise ValueError("set must be nonempty")
    elems = [group.check(tuple(e)) for e in elems]
    base = elems[0]
    return [group.sub(e, base) for e in elems[1:]]


def _check_budget(count: int, budget: int | None):
    budget = enumeration_budget() if budget is None else budget
    if count > budget:
        raise CardinalityOverflow(f"{count} coefficient vectors exceed the budget of {budget}")


def _sums(group: AbelianGroup, gens, alphas):
    """Yield (alpha, index of sum alpha_i g_i) for each alpha."""
    factors = group.factors
    for a in alphas:
        acc = [0] * len(factors)
        for c, g in zip(a, gens):
            if c:
                for k, x in enumerate(g):
                    acc[k] += c * x
        idx = 0
        for x, d in zip(acc, factors):
            idx = idx * d + x % d
        yield a, idx


def _decode(group: AbelianGroup, idx: int) -> tuple[int, ...]:
    out = []
    for d in reversed(group.factors):
        idx, x = divmod(idx, d)
        out.append(x)
    return tuple(reversed(out))


def is_bh_set(group: AbelianGroup, elems, h: int, budget: int | None = None) -> Verdict:
    """Coefficient form: alpha -> sum alpha_i b_i is injective on the simplex of sidelength h.

    The witness is the first colliding pair in lexicographic alpha order.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    gens = _normalize(group, elems)
    n = len(gens)
    _check_budget(comb(h + n, n), budget)
    seen = {}
    for a, idx in _sums(group, gens, simplex_points(n, h)):
        if idx in seen:
            return Verdict(False, {"alpha": list(seen[idx]), "beta": list(a),
                                   "sum": list(_decode(group, idx))})
        seen[idx] = a
    return Verdict(True, info={"sums": len(seen)})


def is_bh_set_multiset(group: AbelianGroup, elems, h: int) -> Verdict:
    """Direct form: all sums b_{i_1} + ... + b_{i_h} with i_1 <= ... <= i_h are distinct.

    Kept as an independent cross-check of :func:`is_bh_set`; no translation
    to 0 is performed.
    """
    elems = [group.check(tuple(e)) for e in elems]
    seen = {}
    for idxs in combinations_with_replacement(range(len(elems)), h):
        s = group.zero()
        for i in idxs:
            s = group.add(s, elems[i])
        if s in seen:
            return Verdict(False, {"first": list(seen[s]), "second": list(idxs), "sum": list(s)})
        seen[s] = idxs
    return Verdict(True, info={"sums": len(seen)})


def _covers(group: AbelianGroup, elems, alphas, budget, count) -> Verdict:
    gens = _normalize(group, elems)
    _check_budget(count, budget)
    hit = set()
    for _, idx in _sums(group, gens, alphas):
        hit.add(idx)
    if len(hit) == group.order:
        return Verdict(True, info={"reached": len(hit)})
    missing = next(i for i in range(group.order) if i not in hit)
    return Verdict(False, {"unreachable": list(_decode(group, missing))},
                   info={"reached": len(hit)})


def is_h_basis(group: AbelianGroup, elems, h: int, budget: int | None = None) -> Verdict:
    """Every group element is alpha . c for some alpha in the simplex of sidelength h.

    The witness is the smallest unreachable element (lexicographic order).
    """
    if h < 0:
        raise ValueError("h must be >= 0")
    n = len(elems) - 1
    return _covers(group, elems, simplex_points(n, h), budget, comb(h + n, n))


def is_generalized_basis(group: AbelianGroup, elems, r: int, t: int,
                         budget: int | None = None) -> Verdict:
    """Like :func:`is_h_basis` with alpha ranging over the difference body (r, t)."""
    if r < 0 or t < 0:
        raise ValueError("r and t must be >= 0")
    n = len(elems) - 1
    if n == 0:
        return _covers(group, elems, [()], budget, 1)
    _check_budget(comb(r + n, n) * comb(t + n, n), budget)
    pts = shape_points(ShapeSpec.diff(n, r, t)).points
    return _covers(group, elems, pts, budget, len(pts))


def classify_arrangement(points: PointSet | ShapeSpec | str, lattice: Lattice) -> Verdict:
    """Packing / covering / tiling classification of (S, L) in Z^n.

    Every point is reduced to its canonical coset representative.  The
    packing witness is the first pair of points (in lexicographic order of
    the second point) sharing a coset; the covering witness is the
    lexicographically smallest canonical representative that is never hit.
    """
    if not isinstance(points, PointSet):
        points = shape_points(points)
    if points.n != lattice.n:
        raise DimensionMismatch(f"{points.n}-dimensional set, rank-{lattice.n} lattice")
    det = lattice.det
    reps = {}
    collision = None
    for p in points.points:
        r = coset_reduce(p, lattice)
        if r in reps:
            if collision is None:
                collision = {"first": list(reps[r]), "second": list(p), "rep": list(r)}
            continue
        reps[r] = p
    packing = collision is None
    covering = len(reps) == det
    info = {"distinct": len(reps), "det": det, "size": len(points)}
    if packing and covering:
        return Verdict(TILING, None, info)
    witness = dict(collision) if collision else {}
    if not covering:
        box = product(*(range(d) for d in lattice.diagonal))
        witness["uncovered"] = list(next(r for r in box if r not in reps))
    if packing:
        return Verdict(PACKING_ONLY, witness, info)
    return Verdict(COVERING_ONLY if covering else NEITHER, witness, info)


def packs(points: Sequence[tuple[int, ...]], hnf_rows) -> bool:
    """Fast packing test used by the search loop; stops at the first collision."""
    n = len(hnf_rows)
    if len(points) > _det(hnf_rows):
        return False
    seen = set()
    for p in points:
        r = list(p)
        for i in range(n - 1, -1, -1):
            row = hnf_rows[i]
            q = r[i] // row[i]
            if q:
                for j in range(i + 1):
                    r[j] -= q * row[j]
        r = tuple(r)
        if r in seen:
            return False
        seen.add(r)
    return True


def covers(points: Sequence[tuple[int, ...]], hnf_rows) -> bool:
    """Fast covering test used by the search loop."""
    det = _det(hnf_rows)
    if len(points) < det:
        return False
    n = len(hnf_rows)
    seen = set()
    for p in points:
        r = list(p)
        for i in range(n - 1, -1, -1):
            row = hnf_rows[i]
            q = r[i] // row[i]
            if q:
                for j in range(i + 1):
                    r[j] -= q * row[j]
        seen.add(tuple(r))
    return len(seen) == det


def _det(hnf_rows) -> int:
    d = 1
    for i, row in enumerate(hnf_rows):
        d *= row[i]
    return d
