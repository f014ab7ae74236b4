"""Closed-form and stored families of extremal B_h sets and perfect tilings.

Nothing here is trusted blind: every candidate is re-verified, and a failed
candidate falls back to exhaustive search.
"""
from __future__ import annotations

import logging

from .catalog import lookup
from .correspondence import kernel_lattice
from .errors import ConstructionInvalid, UnsupportedParameters
from .groups import AbelianGroup
from .linalg import IntMatrix, Lattice
from .search import (Certificate, search_phi, search_tiling, tiling_certificate,
                     verify_certificate)
from .shapes import ShapeSpec
from .verifiers import is_bh_set

log = logging.getLogger(__name__)

# h = 2, n + 1 elements in Z_{n^2+n+1}: perfect B_2 sets shipped in the catalog
STORED_PERFECT_B2 = (3, 5, 7)
# odd h for n = 2 shipped in the catalog
STORED_ODD_H = tuple(range(1, 16, 2))


def hexagon_candidate(r: int):
    """Z_{3r^2+3r+1} with {0, 1, 3r+2}; conjectured B_{2r}, always checked."""
    m = 3 * r * r + 3 * r + 1
    return AbelianGroup.cyclic(m), [(0,), (1,), (3 * r + 2,)]


def certificate_from_set(group: AbelianGroup, elems, h: int, kind: str = "phi") -> Certificate:
    elems = [tuple(e) for e in elems]
    gens = [group.sub(e, elems[0]) for e in elems[1:]]
    lattice = kernel_lattice(group, gens, strict=True)
    cert = Certificate(kind, h, len(gens), lattice.det, lattice, group,
                       [group.zero()] + gens)
    cert.verified = verify_certificate(cert)
    return cert


def _checked(cert: Certificate | None) -> Certificate | None:
    if cert is not None and verify_certificate(cert):
        cert.verified = True
        return cert
    return None


def construct_bh(n: int, h: int, workers: int = 1) -> Certificate:
    """Verified certificate of a B_h set of size n + 1 in a group of order phi(h, n)."""
    if h < 1 or n < 1:
        raise UnsupportedParameters("h and n must be >= 1")
    if n == 1:
        m = h + 1
        cert = certificate_from_set(AbelianGroup.cyclic(m), [(0,), (1,)], h)
    elif n == 2 and h % 2 == 0:
        group, elems = hexagon_candidate(h // 2)
        cert = None
        if is_bh_set(group, elems, h):
            cert = _checked(certificate_from_set(group, elems, h))
        if cert is None:
            log.warning("hexagon candidate failed for h=%d; searching", h)
            cert = search_phi(h, 2, workers=workers)
    elif n == 2:
        cert = _checked(lookup("phi", h, 2))
        if cert is None:
            cert = search_phi(h, 2, workers=workers)
    elif h == 2 and n in STORED_PERFECT_B2:
        cert = _checked(lookup("phi", 2, n))
        if cert is None:
            cert = search_phi(2, n, workers=workers)
    else:
        raise UnsupportedParameters(f"no construction for n={n}, h={h}")
    if not cert.verified:
        raise ConstructionInvalid(f"certificate for n={n}, h={h} failed verification")
    return cert


def _tiling_from(spec: ShapeSpec, lattice: Lattice | None) -> Certificate | None:
    if lattice is None:
        return None
    cert = tiling_certificate(spec, lattice)
    return cert if cert.verified else None


def construct_tiling(n: int, r: int, t: int, workers: int = 1) -> Certificate:
    """Verified lattice tiling of Z^n by the difference body (r, t)."""
    spec = ShapeSpec.diff(n, r, t)
    cert = None
    if n == 1 and r >= 1 and t in (r, r - 1):
        cert = _tiling_from(spec, Lattice(IntMatrix([[r + t + 1]])))
    elif n == 2 and r >= 1 and t == r:
        group, elems = hexagon_candidate(r)
        lattice = kernel_lattice(group, elems[1:]) if is_bh_set(group, elems, 2 * r) else None
        cert = _tiling_from(spec, lattice)
    elif n == 2 and r >= 1 and t == r - 1:
        stored = lookup("phi", r + t, 2)
        cert = _tiling_from(spec, stored.lattice if stored else None)
    elif r == 1 and t == 1:
        stored = lookup("phi", 2, n)
        cert = _tiling_from(spec, stored.lattice if stored else None)
    elif r == 1 and t == 0:
        # {0, 1, ..., n} in Z_{n+1}
        group = AbelianGroup.cyclic(n + 1)
        cert = _tiling_from(spec, kernel_lattice(group, [(i,) for i in range(1, n + 1)]))
    else:
        raise UnsupportedParameters(f"no tiling construction for n={n}, r={r}, t={t}")
    if cert is None:
        log.warning("no stored or closed-form tiling for %s; searching", spec)
        cert = search_tiling(spec, workers=workers)
    if not cert.verified:
        raise ConstructionInvalid(f"tiling for {spec} failed verification")
    return cert


def sidon_residues(m: int, k: int):
    """First (lexicographic) set {0, 1, ...} of k residues mod m with distinct differences."""
    chosen = [0, 1]
    diffs = {1, m - 1}

    def extend(start):
        if len(chosen) == k:
            return True
        for x in range(start, m):
            new = set()
            ok = True
            for y in chosen:
                for d in ((x - y) % m, (y - x) % m):
                    if d in diffs or d in new:
                        ok = False
                        break
                    new.add(d)
                if not ok:
                    break
            if not ok:
                continue
            chosen.append(x)
            diffs.update(new)
            if extend(x + 1):
                return True
            chosen.pop()
            diffs.difference_update(new)
        return False

    return list(chosen) if extend(2) else None


def regenerate_stored() -> list[Certificate]:
    """Rebuild every shipped certificate from scratch, in catalog order."""
    certs = [search_phi(h, 2) for h in STORED_ODD_H]
    for n in STORED_PERFECT_B2:
        m = n * n + n + 1
        residues = sidon_residues(m, n + 1)
        if residues is None:
            raise ConstructionInvalid(f"no perfect B_2 set found in Z_{m}")
        certs.append(certificate_from_set(AbelianGroup.cyclic(m), [(x,) for x in residues], 2))
    for c in certs:
        if not c.verified:
            raise ConstructionInvalid(f"regenerated certificate {c.to_json()} does not verify")
    return certs
