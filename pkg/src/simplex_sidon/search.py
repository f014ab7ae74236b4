"""Exhaustive, certificate-producing searches over sublattices of Z^n.

Every search scans determinants in a fixed direction and, within one
determinant, HNF lattices in :func:`enumerate_hnf` order.  The first hit is
returned, so results never depend on the number of workers.
"""
from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, comb, factorial, prod
from typing import Iterator

from .errors import BudgetExceeded, NotFound
from .groups import AbelianGroup, group_from_lattice, is_cyclic
from .linalg import IntMatrix, Lattice, snf
from .shapes import ShapeSpec, shape_points, simplex_points
from .verifiers import classify_arrangement, covers, is_bh_set, is_h_basis, packs

DEFAULT_SEARCH_BUDGET = 10**8

# lattice packing densities of the n-simplex, known exactly for n <= 3
SIMPLEX_PACKING_DENSITY = {1: Fraction(1), 2: Fraction(2, 3), 3: Fraction(18, 49)}


def search_budget() -> int:
    return int(os.environ.get("SIMPLEX_SIDON_BUDGET", DEFAULT_SEARCH_BUDGET))


@dataclass
class Certificate:
    kind: str  # "phi", "phi_cyclic", "psi" or "tiling"
    h: int
    n: int
    value: int
    lattice: Lattice
    group: AbelianGroup
    set: list
    verified: bool = False
    shape: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "h": self.h,
            "n": self.n,
            "value": self.value,
            "lattice": self.lattice.tolist(),
            "group": list(self.group.factors),
            "set": [list(e) for e in self.set],
        }
        if self.shape is not None:
            out["shape"] = self.shape
        out["verified"] = self.verified
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        return cls(
            kind=obj["kind"], h=obj["h"], n=obj["n"], value=obj["value"],
            lattice=Lattice(IntMatrix(obj["lattice"])),
            group=AbelianGroup(tuple(obj["group"])),
            set=[tuple(e) for e in obj["set"]],
            verified=obj.get("verified", False),
            shape=obj.get("shape"),
        )


def verify_certificate(cert: Certificate) -> bool:
    """Re-derive every claim in ``cert`` from scratch."""
    lat = cert.lattice
    canonical = Lattice.from_basis(lat.hnf)
    if canonical != lat or cert.value != lat.det or cert.value != cert.group.order:
        return False
    if group_from_lattice(lat)[0] != cert.group:
        return False
    if any(not cert.group.contains(e) for e in cert.set):
        return False
    if cert.kind in ("phi", "phi_cyclic"):
        if cert.kind == "phi_cyclic" and not is_cyclic(cert.group):
            return False
        return (classify_arrangement(ShapeSpec.simplex(cert.n, cert.h), lat).packing
                and is_bh_set(cert.group, cert.set, cert.h).ok)
    if cert.kind == "psi":
        return (classify_arrangement(ShapeSpec.simplex(cert.n, cert.h), lat).covering
                and is_h_basis(cert.group, cert.set, cert.h).ok)
    if cert.kind == "tiling":
        spec = ShapeSpec.parse(cert.shape)
        if classify_arrangement(spec, lat).outcome != "tiling":
            return False
        if spec.kind != "cross":
            return is_bh_set(cert.group, cert.set, spec.order).ok
        return True
    return False


def diagonals(n: int, det: int) -> list[tuple[int, ...]]:
    """Ordered factorizations of det into n positive factors, lexicographic."""
    if n == 1:
        return [(det,)]
    out = []
    for d in range(1, det + 1):
        if det % d == 0:
            out.extend((d,) + rest for rest in diagonals(n - 1, det // d))
    return out


def count_hnf(n: int, det: int) -> int:
    """Number of sublattices of Z^n of index det."""
    return sum(prod(d[j] ** (n - 1 - j) for j in range(n)) for d in diagonals(n, det))


def enumerate_hnf(n: int, det: int) -> Iterator[Lattice]:
    """Every HNF lattice of the given determinant, each exactly once.

    Order: diagonal vector lexicographically, then the below-diagonal
    entries read row by row.
    """
    if det < 1:
        raise ValueError("det must be >= 1")
    for diag in diagonals(n, det):
        slots = [(i, j) for i in range(n) for j in range(i)]
        for off in product(*(range(diag[j]) for _, j in slots)):
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = diag[i]
            for (i, j), v in zip(slots, off):
                rows[i][j] = v
            yield Lattice(IntMatrix(rows))


def _cyclic_quotient(lattice: Lattice) -> bool:
    return sum(1 for d in snf(lattice.hnf).d if d != 1) <= 1


def _first_hit(candidates, test, workers: int):
    """Index-minimal candidate satisfying ``test``; identical for any worker count."""
    if workers <= 1:
        return next((c for c in candidates if test(c)), None)
    candidates = list(candidates)
    if not candidates:
        return None
    nchunks = min(len(candidates), workers * 4)
    size = -(-len(candidates) // nchunks)
    best = [len(candidates)]
    lock = threading.Lock()

    def scan(start):
        for i in range(start, min(start + size, len(candidates))):
            if i >= best[0]:
                return
            if test(candidates[i]):
                with lock:
                    best[0] = min(best[0], i)
                return

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(scan, range(0, len(candidates), size)))
    return candidates[best[0]] if best[0] < len(candidates) else None


class _Meter:
    """Budget accounting in point reductions, charged per determinant before scanning."""

    def __init__(self, budget: int | None, npoints: int):
        self.budget = search_budget() if budget is None else budget
        self.npoints = npoints
        self.spent = 0
        self.watermark = None

    def charge(self, n: int, det: int):
        cost = count_hnf(n, det) * self.npoints
        if self.spent + cost > self.budget:
            raise BudgetExceeded(
                f"determinant {det} needs {cost} point reductions; "
                f"{self.spent} of {self.budget} already spent", self.watermark)
        self.spent += cost

    def done(self, det: int):
        self.watermark = det


def phi_floor(h: int, n: int) -> int:
    """Largest lower bound on phi(h, n) known without search."""
    lo = comb(h + n, n)
    if n in SIMPLEX_PACKING_DENSITY:
        lo = max(lo, ceil(Fraction(h**n) / (factorial(n) * SIMPLEX_PACKING_DENSITY[n])))
    return lo


def _unit_set(lattice: Lattice):
    group, proj = group_from_lattice(lattice)
    return group, [group.zero()] + list(proj.images)


def search_phi(h: int, n: int, cyclic_only: bool = False, budget: int | None = None,
               workers: int = 1) -> Certificate:
    """Smallest group order admitting a B_h set of size n + 1 (optionally cyclic)."""
    if h < 1 or n < 1:
        raise ValueError("h and n must be >= 1")
    pts = simplex_points(n, h)
    meter = _Meter(budget, len(pts))

    def test(lat):
        if not packs(pts, lat.hnf.rows):
            return False
        return not cyclic_only or _cyclic_quotient(lat)

    m = phi_floor(h, n)
    while True:
        meter.charge(n, m)
        hit = _first_hit(enumerate_hnf(n, m), test, workers)
        if hit is not None:
            break
        meter.done(m)
        m += 1
    group, elems = _unit_set(hit)
    cert = Certificate("phi_cyclic" if cyclic_only else "phi", h, n, m, hit, group, elems)
    cert.verified = verify_certificate(cert)
    return cert


def search_psi(h: int, n: int, budget: int | None = None, workers: int = 1) -> Certificate:
    """Largest group order admitting an h-basis of size n + 1."""
    if h < 1 or n < 1:
        raise ValueError("h and n must be >= 1")
    pts = simplex_points(n, h)
    meter = _Meter(budget, len(pts))
    test = lambda lat: covers(pts, lat.hnf.rows)  # noqa: E731
    for m in range(len(pts), 0, -1):
        meter.charge(n, m)
        hit = _first_hit(enumerate_hnf(n, m), test, workers)
        if hit is not None:
            break
        meter.done(m)
    group, elems = _unit_set(hit)
    elems = list(dict.fromkeys(elems))
    cert = Certificate("psi", h, n, m, hit, group, elems)
    cert.verified = verify_certificate(cert)
    return cert


def search_tiling(spec: ShapeSpec | str, budget: int | None = None,
                  workers: int = 1) -> Certificate:
    """First lattice tiling Z^n by translates of the shape; raises NotFound otherwise."""
    if isinstance(spec, str):
        spec = ShapeSpec.parse(spec)
    pts = shape_points(spec).points
    m = len(pts)
    meter = _Meter(budget, m)
    meter.charge(spec.n, m)
    # |S| = det, so packing and tiling coincide
    hit = _first_hit(enumerate_hnf(spec.n, m), lambda lat: packs(pts, lat.hnf.rows), workers)
    if hit is None:
        raise NotFound(f"exhaustively none: no lattice of det {m} tiles Z^{spec.n} by {spec}",
                       checked=count_hnf(spec.n, m))
    return tiling_certificate(spec, hit)


def tiling_certificate(spec: ShapeSpec, lattice: Lattice) -> Certificate:
    group, elems = _unit_set(lattice)
    cert = Certificate("tiling", spec.order, spec.n, lattice.det, lattice, group, elems,
                       shape=str(spec))
    cert.verified = verify_certificate(cert)
    return cert
