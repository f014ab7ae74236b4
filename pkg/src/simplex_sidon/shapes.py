"""Discrete simplices, their difference bodies, and cross-polytopes in Z^n.

Shape spec strings::

    simplex:n=2,h=4     nonnegative x with sum(x) <= h
    diff:n=2,r=3,t=2    { x - y : x in simplex(r), y in simplex(t) }
    cross:n=2,r=1       sum(|x_i|) <= r
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import comb
from typing import Sequence

KINDS = ("simplex", "diff", "cross")
_PARAMS = {"simplex": ("n", "h"), "diff": ("n", "r", "t"), "cross": ("n", "r")}
_ALIASES = {"diffbody": "diff", "crosspolytope": "cross"}


@dataclass(frozen=True)
class ShapeSpec:
    kind: str
    n: int
    h: int = 0
    r: int = 0
    t: int = 0

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise ValueError(f"unknown shape kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if min(self.h, self.r, self.t) < 0:
            raise ValueError("shape parameters must be nonnegative")

    @classmethod
    def simplex(cls, n, h):
        return cls("simplex", n, h=h)

    @classmethod
    def diff(cls, n, r, t):
        return cls("diff", n, r=r, t=t)

    @classmethod
    def cross(cls, n, r):
        return cls("cross", n, r=r)

    @classmethod
    def parse(cls, text: str) -> "ShapeSpec":
        m = re.fullmatch(r"\s*(\w+)\s*:\s*(.*?)\s*", text)
        if not m:
            raise ValueError(f"bad shape spec {text!r}")
        kind = _ALIASES.get(m.group(1), m.group(1))
        if kind not in KINDS:
            raise ValueError(f"unknown shape kind in {text!r}")
        params = {}
        for item in filter(None, (s.strip() for s in m.group(2).split(","))):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in _PARAMS[kind] or key in params:
                raise ValueError(f"bad parameter {key!r} in {text!r}")
            params[key] = int(val)
        if set(params) != set(_PARAMS[kind]):
            raise ValueError(f"{text!r} needs parameters {', '.join(_PARAMS[kind])}")
        return cls(kind, **params)

    def __str__(self):
        return f"{self.kind}:" + ",".join(f"{k}={getattr(self, k)}" for k in _PARAMS[self.kind])

    @property
    def order(self) -> int:
        """Sidelength h such that packings of this shape are packings of a simplex."""
        return self.h if self.kind == "simplex" else self.r + self.t


@dataclass(frozen=True)
class PointSet:
    """Finite subset of Z^n, deduplicated and sorted lexicographically."""

    n: int
    points: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, points) -> "PointSet":
        pts = sorted({tuple(int(a) for a in p) for p in points})
        if any(len(p) != n for p in pts):
            raise ValueError(f"all points must have dimension {n}")
        return cls(n, tuple(pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.points)

    def to_json(self) -> dict:
        return {"n": self.n, "points": [list(p) for p in self.points]}


def simplex_points(n: int, h: int) -> list[tuple[int, ...]]:
    """Lattice points of the discrete simplex, in lexicographic order."""
    out = []

    def rec(prefix, left, k):
        if k == 0:
            out.append(tuple(prefix))
            return
        for a in range(left + 1):
            prefix.append(a)
            rec(prefix, left - a, k - 1)
            prefix.pop()

    rec([], h, n)
    return out


@lru_cache(maxsize=256)
def _points(spec: ShapeSpec) -> PointSet:
    n = spec.n
    if spec.kind == "simplex":
        return PointSet(n, tuple(simplex_points(n, spec.h)))
    if spec.kind == "diff":
        xs = simplex_points(n, spec.r)
        ys = simplex_points(n, spec.t)
        return PointSet.of(n, (tuple(a - b for a, b in zip(x, y)) for x in xs for y in ys))
    r = spec.r
    return PointSet.of(
        n, (p for p in product(range(-r, r + 1), repeat=n) if sum(map(abs, p)) <= r))


def shape_points(spec: ShapeSpec | str) -> PointSet:
    if isinstance(spec, str):
        spec = ShapeSpec.parse(spec)
    return _points(spec)


def shape_cardinality(spec: ShapeSpec | str) -> int:
    if isinstance(spec, str):
        spec = ShapeSpec.parse(spec)
    if spec.kind == "simplex":
        return comb(spec.h + spec.n, spec.n)
    return len(_points(spec))


def contains(spec: ShapeSpec, x: Sequence[int]) -> bool:
    """Membership predicate, independent of the enumerated point list."""
    if len(x) != spec.n:
        return False
    if spec.kind == "simplex":
        return all(a >= 0 for a in x) and sum(x) <= spec.h
    if spec.kind == "cross":
        return sum(map(abs, x)) <= spec.r
    # x = u - v with u in simplex(r), v in simplex(t): the cheapest split puts the
    # positive part in u and the negative part in v
    pos = sum(a for a in x if a > 0)
    neg = -sum(a for a in x if a < 0)
    return pos <= spec.r and neg <= spec.t
