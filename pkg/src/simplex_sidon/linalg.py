"""Exact integer matrix algebra.

Python integers are unbounded, so nothing here can overflow.  Lattices are
stored by their canonical Hermite normal form in the lower-triangular,
rows-as-generators convention::

    H[i][j] == 0        for j > i
    H[i][i] > 0
    0 <= H[i][j] < H[j][j]   for i > j
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonSquare, SingularBasis


class IntMatrix:
    """Immutable matrix of Python ints, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, d: Sequence[int]) -> "IntMatrix":
        n = len(d)
        return cls([[d[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def det(self) -> int:
        if not self.is_square:
            raise NonSquare(f"{self.nrows}x{self.ncols} matrix has no determinant")
        return bareiss_det(self.rows)


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate value is an integer."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


@dataclass(frozen=True)
class Lattice:
    """Full-rank sublattice of Z^n, held in canonical HNF."""

    hnf: IntMatrix

    @property
    def n(self) -> int:
        return self.hnf.nrows

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.hnf.rows[i][i] for i in range(self.n))

    @property
    def det(self) -> int:
        return prod(self.diagonal)

    @classmethod
    def from_basis(cls, basis) -> "Lattice":
        return hnf(basis)

    def contains(self, x: Sequence[int]) -> bool:
        return not any(coset_reduce(x, self))

    def tolist(self) -> list[list[int]]:
        return self.hnf.tolist()

    def to_json(self) -> dict:
        return {"n": self.n, "basis": self.tolist()}

    def sort_key(self):
        """Diagonal first, then off-diagonal entries row by row."""
        rows = self.hnf.rows
        off = tuple(rows[i][j] for i in range(self.n) for j in range(i))
        return (self.diagonal, off)


def hnf(basis) -> Lattice:
    """Canonical lower-triangular Hermite normal form of a nonsingular basis.

    Rows of ``basis`` are lattice generators.  Only unimodular row
    operations are used, so the lattice is preserved.
    """
    b = as_matrix(basis)
    if not b.is_square:
        raise NonSquare(f"basis must be square, got {b.nrows}x{b.ncols}")
    n = b.nrows
    if b.det() == 0:
        raise SingularBasis("basis has zero determinant")
    h = [list(r) for r in b.rows]
    # Pivot for column j ends up in row j; rows 0..j-1 are cleared in column j.
    for j in range(n - 1, -1, -1):
        while True:
            nz = [i for i in range(j + 1) if h[i][j] != 0]
            p = min(nz, key=lambda i: (abs(h[i][j]), i))
            for i in nz:
                if i != p:
                    q = h[i][j] // h[p][j]
                    if q:
                        h[i] = [a - q * c for a, c in zip(h[i], h[p])]
            if all(h[i][j] == 0 for i in range(j + 1) if i != p):
                break
        if p != j:
            h[p], h[j] = h[j], h[p]
        if h[j][j] < 0:
            h[j] = [-a for a in h[j]]
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            q = h[i][j] // h[j][j]
            if q:
                h[i] = [a - q * c for a, c in zip(h[i], h[j])]
    return Lattice(IntMatrix(h))


def coset_reduce(x: Sequence[int], lattice: Lattice) -> tuple[int, ...]:
    """Canonical representative of x + L, reduced into the box prod [0, H[i][i])."""
    h = lattice.hnf.rows
    n = len(h)
    if len(x) != n:
        raise DimensionMismatch(f"vector of length {len(x)} for a rank-{n} lattice")
    r = list(x)
    for i in range(n - 1, -1, -1):
        q = r[i] // h[i][i]
        if q:
            row = h[i]
            for j in range(i + 1):
                r[j] -= q * row[j]
    return tuple(r)


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == diag(d)`` with U, V unimodular."""

    d: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix


def snf(a) -> SnfResult:
    """Smith normal form with recorded unimodular transforms."""
    A = as_matrix(a)
    if not A.is_square:
        raise NonSquare(f"matrix must be square, got {A.nrows}x{A.ncols}")
    n = A.nrows
    m = [list(r) for r in A.rows]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        m[i], m[k] = m[k], m[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in m:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        m[dst] = [a - q * b for a, b in zip(m[dst], m[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in m:
            r[dst] -= q * r[src]
        for r in V:
            r[dst] -= q * r[src]

    for t in range(n):
        nz = [(abs(m[i][j]), i, j) for i in range(t, n) for j in range(t, n) if m[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, n):
                if m[i][t]:
                    add_row(i, t, m[i][t] // m[t][t])
                    if m[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if m[t][j]:
                    add_col(j, t, m[t][j] // m[t][t])
                    if m[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # row/column t are clear; enforce divisibility on the remainder
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n)
                        if m[i][j] % m[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if m[t][t] < 0:
            m[t] = [-v for v in m[t]]
            U[t] = [-v for v in U[t]]
    d = tuple(m[i][i] for i in range(n))
    return SnfResult(d, IntMatrix(U), IntMatrix(V))
