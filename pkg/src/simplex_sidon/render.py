"""Deterministic SVG pictures of 2-D lattice arrangements.

Each lattice translate S + x meeting the window becomes one ``<g>`` holding a
unit square per point of S + x inside the window.  Output bytes depend only
on the inputs: fixed ordering, fixed palette, integer coordinates.
"""
from __future__ import annotations

from .errors import UnsupportedDimension
from .linalg import Lattice
from .shapes import PointSet, ShapeSpec, shape_points

CELL = 20
PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1")


def lattice_coordinates(x, lattice: Lattice) -> tuple[int, ...]:
    """Integer c with x = sum c_i * row_i (x must lie in the lattice)."""
    h = lattice.hnf.rows
    r = list(x)
    c = [0] * lattice.n
    for i in range(lattice.n - 1, -1, -1):
        c[i], rem = divmod(r[i], h[i][i])
        if rem:
            raise ValueError(f"{tuple(x)} is not in the lattice")
        for j in range(i + 1):
            r[j] -= c[i] * h[i][j]
    return tuple(c)


def translates(points: PointSet, lattice: Lattice, lo: int, hi: int):
    """Lattice vectors x (lexicographic) such that S + x meets [lo, hi]^2."""
    if lo > hi or not len(points):
        return []
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    out = []
    for a in range(lo - max(xs), hi - min(xs) + 1):
        for b in range(lo - max(ys), hi - min(ys) + 1):
            if not lattice.contains((a, b)):
                continue
            if any(lo <= a + px <= hi and lo <= b + py <= hi for px, py in points):
                out.append((a, b))
    return out


def render_svg(shape: ShapeSpec | PointSet | str, lattice: Lattice, window=(-8, 8)) -> str:
    points = shape if isinstance(shape, PointSet) else shape_points(shape)
    if points.n != 2 or lattice.n != 2:
        raise UnsupportedDimension("only 2-dimensional arrangements can be rendered")
    lo, hi = window
    side = max(hi - lo + 1, 0) * CELL
    label = str(shape) if not isinstance(shape, PointSet) else f"{len(points)} points"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f"<title>{label} / lattice {lattice.tolist()}</title>",
        f'<rect x="0" y="0" width="{side}" height="{side}" fill="#ffffff"/>',
    ]
    for a, b in translates(points, lattice, lo, hi):
        c = lattice_coordinates((a, b), lattice)
        color = PALETTE[(c[0] + 3 * c[1]) % len(PALETTE)]
        out.append(f'<g class="translate" data-offset="{a},{b}" fill="{color}" '
                   f'stroke="#333333" stroke-width="1">')
        for px, py in points:
            x, y = a + px, b + py
            if lo <= x <= hi and lo <= y <= hi:
                out.append(f'<rect x="{(x - lo) * CELL}" y="{(hi - y) * CELL}" '
                           f'width="{CELL}" height="{CELL}"/>')
        out.append("</g>")
    if lo <= 0 <= hi:
        cx, cy = (0 - lo) * CELL + CELL // 2, (hi - 0) * CELL + CELL // 2
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
