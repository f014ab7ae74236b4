"""Finite Abelian groups in invariant-factor form.

Elements are plain tuples of residues, one per invariant factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterator, Sequence

from .errors import DimensionMismatch, ElementNotInGroup, GroupMismatch
from .linalg import IntMatrix, Lattice, snf


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k and every d_i >= 2."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", f)
        if any(d < 2 for d in f):
            raise ValueError(f"invariant factors must be >= 2, got {f}")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {f}")

    @classmethod
    def cyclic(cls, m: int) -> "AbelianGroup":
        return cls((m,) if m > 1 else ())

    @classmethod
    def from_factors(cls, factors: Sequence[int]) -> "AbelianGroup":
        """Normalize an arbitrary list of cyclic orders to invariant-factor form."""
        s = snf(IntMatrix.diagonal(list(factors)) if factors else IntMatrix([]))
        return cls(tuple(d for d in s.d if d != 1))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def __len__(self):
        return self.order

    def __str__(self):
        return " x ".join(f"Z_{d}" for d in self.factors) or "trivial"

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.rank:
            raise DimensionMismatch(f"{tuple(v)} has {len(v)} coordinates, group has {self.rank}")
        return tuple(int(a) % d for a, d in zip(v, self.factors))

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.rank and all(0 <= a < d for a, d in zip(x, self.factors))

    def check(self, x: Sequence[int]) -> tuple[int, ...]:
        if not self.contains(x):
            raise ElementNotInGroup(f"{tuple(x)} is not a reduced element of {self}")
        return tuple(x)

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def sub(self, x, y):
        return tuple((a - b) % d for a, b, d in zip(x, y, self.factors))

    def scale(self, k: int, x):
        return tuple((k * a) % d for a, d in zip(x, self.factors))

    def index(self, x: Sequence[int]) -> int:
        """Mixed-radix encoding in [0, order); bijective on reduced elements."""
        i = 0
        for a, d in zip(x, self.factors):
            i = i * d + a
        return i

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All elements in lexicographic order (which is also index order)."""
        return product(*(range(d) for d in self.factors))

    def to_json(self) -> dict:
        return {"factors": list(self.factors)}

    @classmethod
    def from_json(cls, obj: dict) -> "AbelianGroup":
        return cls.from_factors(obj["factors"])


def is_cyclic(group: AbelianGroup) -> bool:
    return group.rank <= 1


def element_combine(group: AbelianGroup, coeffs: Sequence[int], elems: Sequence[Sequence[int]]):
    """sum(coeffs[i] * elems[i]) reduced in ``group``."""
    if len(coeffs) != len(elems):
        raise GroupMismatch(f"{len(coeffs)} coefficients for {len(elems)} elements")
    acc = [0] * group.rank
    for c, e in zip(coeffs, elems):
        if len(e) != group.rank:
            raise GroupMismatch(f"{tuple(e)} does not belong to {group}")
        for k, a in enumerate(e):
            acc[k] += c * a
    return group.reduce(acc)


@dataclass(frozen=True)
class GroupProjection:
    """The quotient map Z^n -> Z^n / L, given by the images of e^(1)..e^(n)."""

    n: int
    target: AbelianGroup
    images: tuple[tuple[int, ...], ...]

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.n:
            raise DimensionMismatch(f"vector of length {len(x)}, projection from Z^{self.n}")
        return element_combine(self.target, x, self.images)


def group_from_lattice(lattice: Lattice) -> tuple[AbelianGroup, GroupProjection]:
    """Z^n / L as an invariant-factor group, with the projection x -> [x].

    If U H V = diag(d) then x -> x V maps L onto the row space of diag(d),
    so the residues of x V modulo d are the group coordinates.
    """
    s = snf(lattice.hnf)
    keep = [i for i, d in enumerate(s.d) if d != 1]
    group = AbelianGroup(tuple(s.d[i] for i in keep))
    V = s.V.rows
    images = tuple(group.reduce([V[row][i] for i in keep]) for row in range(lattice.n))
    return group, GroupProjection(lattice.n, group, images)
