import pytest

from simplex_sidon.catalog import stored_certificates
from simplex_sidon.constructions import (construct_bh, construct_tiling, hexagon_candidate,
                                         regenerate_stored, sidon_residues)
from simplex_sidon.errors import UnsupportedParameters
from simplex_sidon.search import search_phi
from simplex_sidon.verifiers import classify_arrangement, is_bh_set


def test_construct_bh_examples():
    c = construct_bh(1, 5)
    assert c.group.factors == (6,) and c.set == [(0,), (1,)] and c.verified
    c = construct_bh(2, 2)
    assert c.value == 7 and c.set == [(0,), (1,), (5,)]
    c = construct_bh(2, 4)
    assert c.value == 19 and c.set == [(0,), (1,), (8,)]
    assert construct_bh(2, 3).value == 12
    with pytest.raises(UnsupportedParameters):
        construct_bh(4, 3)


def test_hexagon_family():
    for r in range(1, 9):
        group, elems = hexagon_candidate(r)
        assert group.order == 3 * r * r + 3 * r + 1
        assert is_bh_set(group, elems, 2 * r)


def test_construct_tiling_examples():
    c = construct_tiling(2, 1, 1)
    assert c.value == 7 and c.verified
    c = construct_tiling(2, 3, 2)
    assert c.value == 27 and c.verified
    c = construct_tiling(3, 1, 1)
    assert c.value == 13 and c.verified
    for n in range(1, 6):
        assert construct_tiling(n, 1, 0).value == n + 1
    with pytest.raises(UnsupportedParameters):
        construct_tiling(3, 2, 2)


def test_tiling_is_scaled_packing():
    # tiling by the (r, t) body <=> packing of the simplex of sidelength r + t
    for r in range(1, 5):
        for t in (r - 1, r):
            c = construct_tiling(2, r, t)
            assert classify_arrangement(f"simplex:n=2,h={r + t}", c.lattice).packing
            assert c.value == search_phi(r + t, 2).value


def test_sidon_residues():
    assert sidon_residues(7, 3) == [0, 1, 3]
    assert sidon_residues(13, 4) == [0, 1, 3, 9]
    assert sidon_residues(8, 4) is None


def test_stored_catalog_reproducible():
    stored = stored_certificates(reverify=True)
    assert all(c.verified for c in stored)
    fresh = regenerate_stored()
    assert [c.to_json() for c in fresh] == [c.to_json() for c in stored]
