"""Unit tests for the bitmask hypergraph layer."""

import itertools

import numpy as np
import pytest

from hgstate import hypercore as hc


# ---------------------------------------------------------------------------
# edge masks and vertex sets


def test_edge_mask_roundtrip():
    for e in range(1, hc.N_EDGE_KINDS + 1):
        assert hc.edge_mask(hc.edge_vertices(e)) == e


def test_edge_mask_examples():
    assert hc.edge_mask([1]) == 1
    assert hc.edge_mask([1, 2]) == 3
    assert hc.edge_mask([1, 2, 3, 4]) == 15
    assert hc.edge_vertices(9) == (1, 4)
    assert hc.edge_size(9) == 2


@pytest.mark.parametrize("bad", [[], [0], [5], [1, 1]])
def test_edge_mask_rejects(bad):
    with pytest.raises(ValueError):
        hc.edge_mask(bad)


def test_edges_of_ordering():
    h = hc.code_of_edges([15, 3, 7, 1])
    # larger edges first, lexicographic inside a size
    assert hc.edges_of(h) == (15, 7, 3, 1)


def test_code_of_edges_roundtrip_random():
    rng = np.random.default_rng(3)
    for h in rng.integers(0, hc.N_CODES, size=200):
        h = int(h)
        assert hc.code_of_edges(hc.edges_of(h)) == h


def test_code_of_edges_rejects_duplicates():
    with pytest.raises(ValueError):
        hc.code_of_edges([3, 3])


# ---------------------------------------------------------------------------
# sign function round trip


def test_signs_from_hypergraph_examples():
    # empty hypergraph: every sign positive
    assert hc.signs_from_hypergraph(0).tolist() == [0] * hc.N_BASIS
    # single four-edge: only the all-ones string flips
    g = hc.signs_from_hypergraph(hc.code_of_edges([15]))
    assert g.sum() == 1 and g[15] == 1


def test_sign_roundtrip_random():
    rng = np.random.default_rng(11)
    for h in rng.integers(0, hc.N_CODES, size=300):
        h = int(h)
        assert hc.hypergraph_from_signs(hc.signs_from_hypergraph(h)) == h


def test_hypergraph_from_signs_rejects_global_sign():
    g = np.zeros(hc.N_BASIS, dtype=np.uint8)
    g[0] = 1
    with pytest.raises(ValueError):
        hc.hypergraph_from_signs(g)


def test_sign_matrix_matches_scalar():
    codes = np.arange(0, hc.N_CODES, 37, dtype=np.uint16)
    m = hc.sign_matrix(codes)
    for k, h in enumerate(codes[:50]):
        assert np.array_equal(m[k], hc.signs_from_hypergraph(int(h)))


# ---------------------------------------------------------------------------
# local moves


def test_apply_x_known_case():
    # X on vertex 3 of the single edge {1,2,3} toggles {1,2}
    h = hc.code_of_edges([7])
    assert hc.edges_of(hc.apply_x(h, 3)) == (7, 3)


def test_apply_x_is_involution():
    rng = np.random.default_rng(5)
    for h in rng.integers(0, hc.N_CODES, size=100):
        for i in hc.VERTICES:
            assert hc.apply_x(hc.apply_x(int(h), i), i) == int(h)


def test_apply_z_toggles_loop():
    h = 0
    h1 = hc.apply_z(h, 2)
    assert hc.edges_of(h1) == (2,)
    assert hc.apply_z(h1, 2) == 0


def test_permute_identity_and_composition():
    rng = np.random.default_rng(7)
    perms = list(itertools.permutations(hc.VERTICES))
    for h in rng.integers(0, hc.N_CODES, size=40):
        h = int(h)
        assert hc.permute(h, (1, 2, 3, 4)) == h
        p = perms[rng.integers(len(perms))]
        q = perms[rng.integers(len(perms))]
        pq = tuple(q[p[i - 1] - 1] for i in hc.VERTICES)
        assert hc.permute(hc.permute(h, p), q) == hc.permute(h, pq)


def test_neighborhood():
    h = hc.code_of_edges([7, 9])  # {1,2,3} and {1,4}
    assert hc.neighborhood(h, 1) == (hc.edge_mask([2, 3]), hc.edge_mask([4]))
    assert hc.has_loop(hc.apply_z(h, 1), 1)
    assert not hc.has_loop(h, 1)


# ---------------------------------------------------------------------------
# rank, loops, standard form


def test_rank():
    assert hc.rank(0) == 0
    assert hc.rank(hc.code_of_edges([1])) == 1
    assert hc.rank(hc.code_of_edges([3, 15])) == 4


def test_strip_loops():
    h = hc.code_of_edges([1, 2, 7])
    assert hc.edges_of(hc.strip_loops(h)) == (7,)


def test_standardize_worked_example():
    # the four-edge absorbs the three-edge via X on the missing vertex
    h = hc.parse_edges("1234,123")
    assert hc.format_edges(hc.standardize(h)) == "1234"


def test_standardize_properties_sampled():
    rng = np.random.default_rng(13)
    for h in rng.integers(0, hc.N_CODES, size=400):
        s = hc.standardize(int(h))
        edges = hc.edges_of(s)
        sizes = {hc.edge_size(e) for e in edges}
        assert 1 not in sizes  # loop free
        if 15 in edges:
            assert 3 not in sizes  # no three-edges next to the four-edge
        assert hc.standardize(s) == s  # idempotent


# ---------------------------------------------------------------------------
# vectorized image tables


def test_image_tables_match_scalar_moves():
    codes = np.arange(hc.N_CODES, dtype=np.uint16)
    sample = np.random.default_rng(17).integers(0, hc.N_CODES, size=64)
    for i in hc.VERTICES:
        tx = hc.x_image_table(i)
        tz = hc.z_image_table(i)
        assert tx.shape == (hc.N_CODES,)
        for h in sample:
            assert int(tx[h]) == hc.apply_x(int(h), i)
            assert int(tz[h]) == hc.apply_z(int(h), i)
    p = (2, 4, 1, 3)
    tp = hc.permutation_image_table(p)
    for h in sample:
        assert int(tp[h]) == hc.permute(int(h), p)
    assert np.array_equal(hc.permutation_image_table((1, 2, 3, 4)), codes)


# ---------------------------------------------------------------------------
# text formats


@pytest.mark.parametrize(
    "text,edges",
    [
        ("", ()),
        ("1234", (15,)),
        ("12,34", (3, 12)),
        ("1234,14,23", (15, 9, 6)),
    ],
)
def test_parse_edges(text, edges):
    assert hc.edges_of(hc.parse_edges(text)) == edges


def test_parse_format_roundtrip_random():
    rng = np.random.default_rng(19)
    for h in rng.integers(0, hc.N_CODES, size=150):
        h = int(h)
        assert hc.parse_edges(hc.format_edges(h)) == h


@pytest.mark.parametrize("bad", ["125", "1234,,12", "112", "12,12", "1 2"])
def test_parse_edges_rejects(bad):
    with pytest.raises(ValueError):
        hc.parse_edges(bad)


def test_basis_string_roundtrip():
    for mu in range(hc.N_BASIS):
        s = hc.basis_string(mu)
        assert len(s) == 4
        assert hc.basis_index(s) == mu
    # vertex 1 is the leftmost character
    assert hc.basis_string(1) == "1000"
    assert hc.basis_string(8) == "0001"
