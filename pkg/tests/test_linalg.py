import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_nonsingular, random_unimodular
from simplex_sidon.errors import DimensionMismatch, NonSquare, SingularBasis
from simplex_sidon.linalg import IntMatrix, Lattice, bareiss_det, coset_reduce, hnf, snf


def brute_det(m):
    n = len(m)
    if n == 0:
        return 1
    return sum((-1) ** j * m[0][j] * brute_det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(n))


@pytest.mark.parametrize("basis, expected", [
    ([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
    ([[7, 0], [-3, 1]], [[7, 0], [4, 1]]),
    ([[2, 0], [0, 3]], [[2, 0], [0, 3]]),
])
def test_hnf_examples(basis, expected):
    assert hnf(basis).tolist() == expected


@pytest.mark.parametrize("a, d", [
    ([[1, 0], [0, 1]], (1, 1)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[7, 0], [4, 1]], (1, 7)),
])
def test_snf_examples(a, d):
    assert snf(a).d == d


@pytest.mark.parametrize("x, expected", [((-3, 1), (0, 0)), ((8, 1), (4, 0)), ((0, 0), (0, 0))])
def test_coset_reduce_examples(x, expected):
    assert coset_reduce(x, hnf([[7, 0], [4, 1]])) == expected


def test_errors():
    with pytest.raises(SingularBasis):
        hnf([[1, 2], [2, 4]])
    with pytest.raises(NonSquare):
        hnf([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(NonSquare):
        snf([[1, 2]])
    with pytest.raises(DimensionMismatch):
        coset_reduce((1, 2, 3), hnf([[2, 0], [0, 2]]))


def test_bareiss_matches_cofactor_expansion(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == brute_det(m)


def test_big_entries_stay_exact():
    big = 10**40
    a = IntMatrix([[big, 1], [1, big + 7]])
    s = snf(a)
    assert s.U @ a @ s.V == IntMatrix.diagonal(s.d)
    assert s.d[0] * s.d[1] == abs(a.det())


matrices = st.integers(2, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n),
                       min_size=n, max_size=n))


def _hnf_invariants(lat: Lattice):
    h = lat.hnf.rows
    n = len(h)
    for i in range(n):
        assert h[i][i] > 0
        for j in range(n):
            if j > i:
                assert h[i][j] == 0
            elif j < i:
                assert 0 <= h[i][j] < h[j][j]


@settings(max_examples=200, deadline=None)
@given(matrices, st.integers(0, 2**32))
def test_hnf_properties(rows, seed):
    a = IntMatrix(rows)
    if a.det() == 0:
        return
    lat = hnf(a)
    _hnf_invariants(lat)
    assert lat.det == abs(a.det())
    assert hnf(lat.hnf) == lat
    u = random_unimodular(random.Random(seed), a.nrows)
    assert hnf(u @ a) == lat
    # every original generator lies in the lattice and vice versa
    for row in a.rows:
        assert lat.contains(row)
    for row in lat.hnf.rows:
        assert all(c.denominator == 1 for c in solve_left(a.rows, row))


def solve_left(rows, target):
    """c with c . rows = target, over the rationals (Cramer's rule)."""
    n = len(rows)
    cols = [list(c) for c in zip(*rows)]  # system: sum_i c_i rows[i][j] = target[j]
    det = brute_det(cols)
    out = []
    for i in range(n):
        m = [r[:] for r in cols]
        for j in range(n):
            m[j][i] = target[j]
        out.append(Fraction(brute_det(m), det))
    return out


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_properties(rows):
    a = IntMatrix(rows)
    s = snf(a)
    assert s.U @ a @ s.V == IntMatrix.diagonal(s.d)
    assert abs(s.U.det()) == 1 and abs(s.V.det()) == 1
    assert all(d >= 0 for d in s.d)
    for x, y in zip(s.d, s.d[1:]):
        assert (y == 0) if x == 0 else (y % x == 0)
    if a.det():
        assert abs(a.det()) == s.d[0] * s.d[1] * (s.d[2] if len(s.d) > 2 else 1)


def test_snf_singular_and_zero():
    assert snf([[0, 0], [0, 0]]).d == (0, 0)
    s = snf([[2, 4], [1, 2]])
    assert s.d == (1, 0)


def test_coset_reduce_partitions_box(rng):
    for _ in range(15):
        lat = hnf(random_nonsingular(rng, 2, -5, 5))
        diag = lat.diagonal
        m = lat.det
        reps = {}
        for x in product(range(m), repeat=2):
            r = coset_reduce(x, lat)
            assert all(0 <= r[i] < diag[i] for i in range(2))
            assert coset_reduce(r, lat) == r
            assert lat.contains(tuple(a - b for a, b in zip(x, r)))
            reps[r] = reps.get(r, 0) + 1
        assert len(reps) == m
        assert set(reps.values()) == {m ** 2 // m}


def test_coset_reduce_equivalence(rng):
    lat = hnf([[6, 1, 0], [2, 3, 0], [1, 1, 5]])
    for _ in range(300):
        x = tuple(rng.randint(-30, 30) for _ in range(3))
        y = tuple(rng.randint(-30, 30) for _ in range(3))
        same = coset_reduce(x, lat) == coset_reduce(y, lat)
        assert same == lat.contains(tuple(a - b for a, b in zip(x, y)))
