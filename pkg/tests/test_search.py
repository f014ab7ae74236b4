from itertools import product

import pytest

from conftest import random_unimodular
from simplex_sidon.errors import BudgetExceeded, NotFound
from simplex_sidon.linalg import hnf
from simplex_sidon.search import (Certificate, count_hnf, enumerate_hnf, search_phi, search_psi,
                                  search_tiling, verify_certificate)


def sigma(m):
    return sum(d for d in range(1, m + 1) if m % d == 0)


def test_enumerate_examples():
    assert [l.tolist() for l in enumerate_hnf(1, 5)] == [[[5]]]
    got = [l.tolist() for l in enumerate_hnf(2, 2)]
    assert sorted(got) == sorted([[[1, 0], [0, 2]], [[2, 0], [0, 1]], [[2, 0], [1, 1]]])
    assert len(list(enumerate_hnf(2, 4))) == 7


def test_counts_match_sigma_and_formula():
    for m in range(1, 41):
        lats = list(enumerate_hnf(2, m))
        assert len(lats) == sigma(m) == count_hnf(2, m)
        assert len(set(lats)) == len(lats)
    for m in range(1, 13):
        assert len(list(enumerate_hnf(3, m))) == count_hnf(3, m)


def test_enumeration_matches_canonicalized_brute_force():
    # every nonsingular 2x2 matrix with small entries, canonicalized
    for m in (1, 2, 3, 4, 6):
        expected = set()
        for a, b, c, d in product(range(-m, m + 1), repeat=4):
            if abs(a * d - b * c) == m:
                expected.add(hnf([[a, b], [c, d]]))
        assert expected == set(enumerate_hnf(2, m))


def test_enumeration_closed_under_unimodular(rng):
    for m in (6, 8, 12):
        lats = set(enumerate_hnf(2, m))
        for lat in lats:
            u = random_unimodular(rng, 2)
            assert hnf(u @ lat.hnf) in lats


def test_search_examples():
    assert search_phi(4, 2).value == 19
    assert search_phi(3, 2).value == 12
    for h in range(1, 8):
        assert search_phi(h, 1).value == h + 1
        assert search_psi(h, 1).value == h + 1
    for n in range(1, 4):
        assert search_psi(1, n).value == n + 1
    c = search_psi(2, 2)
    assert c.value == 5 and c.verified


def test_phi_2_3_pinned():
    c = search_phi(2, 3)
    assert c.value == 13 and c.verified


def test_cyclic_restriction():
    for h, n in [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3)]:
        plain = search_phi(h, n)
        cyc = search_phi(h, n, cyclic_only=True)
        assert cyc.value >= plain.value and cyc.verified
        assert len(cyc.group.factors) <= 1
    assert search_phi(1, 2, cyclic_only=True).value == 3


def test_monotone_in_h_and_n():
    vals = {(h, n): search_phi(h, n).value for h in range(1, 6) for n in (1, 2)}
    for h in range(1, 5):
        for n in (1, 2):
            assert vals[(h, n)] < vals[(h + 1, n)]
    for h in range(1, 6):
        assert vals[(h, 1)] < vals[(h, 2)]


def test_tilings():
    c = search_tiling("diff:n=2,r=1,t=1")
    assert c.value == 7 and c.verified
    assert search_tiling("diff:n=2,r=3,t=2").value == 27
    assert search_tiling("cross:n=2,r=1").value == 5
    with pytest.raises(NotFound) as exc:
        search_tiling("simplex:n=2,h=2")
    assert exc.value.checked == count_hnf(2, 6)


def test_budget():
    with pytest.raises(BudgetExceeded) as exc:
        search_phi(6, 2, budget=2000)
    # watermark: last determinant scanned completely without a hit
    w = exc.value.watermark
    assert w is not None and w < 37
    from simplex_sidon.verifiers import classify_arrangement
    assert not any(classify_arrangement("simplex:n=2,h=6", l).packing for l in enumerate_hnf(2, w))
    c = search_phi(2, 2, budget=10**6)
    assert c.value == 7


def test_workers_deterministic():
    for args in [(4, 2), (5, 2), (2, 3)]:
        a = search_phi(*args, workers=1).to_json()
        b = search_phi(*args, workers=8).to_json()
        assert a == b
    assert search_psi(3, 2, workers=1).to_json() == search_psi(3, 2, workers=4).to_json()


def test_certificate_json_roundtrip_and_tamper():
    c = search_phi(4, 2)
    d = Certificate.from_json(c.to_json())
    assert verify_certificate(d)
    assert list(c.to_json()) == ["kind", "h", "n", "value", "lattice", "group", "set", "verified"]
    bad = c.to_json()
    bad["value"] = 18
    assert not verify_certificate(Certificate.from_json(bad))
    bad = c.to_json()
    bad["h"] = 5
    assert not verify_certificate(Certificate.from_json(bad))


def test_psi_n2_pinned():
    assert [search_psi(h, 2).value for h in range(1, 5)] == [3, 5, 8, 12]
