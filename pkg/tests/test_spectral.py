"""Kirchhoff matrix assembly and the Jacobi eigensolver."""

from fractions import Fraction

import numpy as np
import pytest

import corpus
from graphheat import (
    Graph,
    KirchhoffMatrix,
    SpectralDecomposition,
    bfs_profile,
    eigendecompose,
    kirchhoff_matrix,
    spectral_path_identity,
)


def decompose(g: Graph) -> tuple[KirchhoffMatrix, SpectralDecomposition]:
    L = kirchhoff_matrix(g)
    return L, eigendecompose(L)


# --- matrix assembly --------------------------------------------------------


def test_kirchhoff_entries_path():
    L = kirchhoff_matrix(corpus.path_graph(3))
    assert L.exact == (
        (-1, 1, 0),
        (1, -2, 1),
        (0, 1, -1),
    )
    np.testing.assert_array_equal(L.dense, np.array(L.exact, dtype=float))


def test_kirchhoff_entries_weighted():
    g = Graph(3, [(0, 1), (1, 2)], weights={(0, 1): 2, (1, 2): Fraction(1, 3)})
    L = kirchhoff_matrix(g)
    assert L.exact[0][0] == -2
    assert L.exact[0][1] == 2
    assert L.exact[1][1] == Fraction(-7, 3)
    assert L.exact[1][2] == Fraction(1, 3)
    assert L.exact[2][2] == Fraction(-1, 3)
    assert L.exact[0][2] == 0


def test_kirchhoff_rows_sum_to_zero():
    g = corpus.random_weighted_graph(3, 9, 0.4)
    L = kirchhoff_matrix(g)
    for row in L.exact:
        assert sum(row) == 0


def test_dense_is_read_only():
    L = kirchhoff_matrix(corpus.cycle_graph(4))
    with pytest.raises(ValueError):
        L.dense[0, 0] = 99.0


def test_frobenius_matches_numpy():
    L = kirchhoff_matrix(corpus.random_connected_graph(5, 12, 0.3))
    assert L.frobenius == pytest.approx(np.linalg.norm(L.dense), rel=1e-15)


# --- eigensolver: tiny closed forms ----------------------------------------


def test_single_edge_eigenpairs():
    # two vertices, one edge: mu = {0, -2}; both eigenvectors are
    # (1, +-1)/sqrt(2) with the sign convention pinning entry 0 positive
    _, dec = decompose(corpus.complete_graph(2))
    r = 1 / np.sqrt(2.0)
    np.testing.assert_allclose(dec.mu, [0.0, -2.0], atol=1e-14)
    np.testing.assert_allclose(dec.V, [[r, r], [r, -r]], atol=1e-14)


def test_triangle_spectrum():
    _, dec = decompose(corpus.complete_graph(3))
    np.testing.assert_allclose(dec.mu, [0.0, -3.0, -3.0], atol=1e-13)


def test_edgeless_pair_is_identity_decomposition():
    _, dec = decompose(Graph(2))
    np.testing.assert_array_equal(dec.mu, [0.0, 0.0])
    np.testing.assert_array_equal(dec.V, np.eye(2))


def test_path3_known_eigenvalues():
    # L for the 3-path has eigenvalues {0, -1, -3}
    _, dec = decompose(corpus.path_graph(3))
    np.testing.assert_allclose(dec.mu, [0.0, -1.0, -3.0], atol=1e-13)


def test_lambdas_are_nonnegative_and_ascending():
    _, dec = decompose(corpus.random_connected_graph(9, 14, 0.3))
    lam = dec.lambdas
    assert lam[0] == pytest.approx(0.0, abs=1e-12)
    assert np.all(lam >= -1e-12)
    assert np.all(np.diff(lam) >= 0)


# --- eigensolver: invariants against the LAPACK oracle ----------------------


@pytest.mark.parametrize("seed", range(8))
def test_eigenvalues_match_lapack(seed):
    g = corpus.random_connected_graph(300 + seed, 5 + 3 * seed, 0.35)
    L, dec = decompose(g)
    oracle = np.linalg.eigvalsh(L.dense)  # ascending
    np.testing.assert_allclose(
        np.sort(dec.mu), oracle, atol=1e-10 * max(L.frobenius, 1.0)
    )


@pytest.mark.parametrize("seed", range(8))
def test_decomposition_invariants(seed):
    g = corpus.random_connected_graph(400 + seed, 6 + 4 * seed, 0.3)
    L, dec = decompose(g)
    scale = max(L.frobenius, 1.0)
    # eigen-equation, orthonormality, reconstruction
    assert np.linalg.norm(L.dense @ dec.V - dec.V * dec.mu) <= 1e-10 * scale
    assert np.linalg.norm(dec.V.T @ dec.V - np.eye(g.n)) <= 1e-12 * g.n
    assert np.linalg.norm((dec.V * dec.mu) @ dec.V.T - L.dense) <= 1e-10 * scale


def test_weighted_graph_invariants():
    g = corpus.random_weighted_graph(21, 10, 0.4)
    L, dec = decompose(g)
    scale = max(L.frobenius, 1.0)
    assert np.linalg.norm((dec.V * dec.mu) @ dec.V.T - L.dense) <= 1e-10 * scale


def test_zero_eigenvalue_multiplicity_counts_components():
    # two triangles plus an isolated vertex: three components
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    _, dec = decompose(Graph(7, edges))
    near_zero = np.sum(np.abs(dec.mu) < 1e-9)
    assert near_zero == 3


def test_decomposition_is_deterministic():
    g = corpus.random_connected_graph(77, 20, 0.25)
    L = kirchhoff_matrix(g)
    a = eigendecompose(L)
    b = eigendecompose(L)
    assert np.array_equal(a.mu, b.mu)
    assert np.array_equal(a.V, b.V)


def test_sign_convention_fixes_each_column():
    _, dec = decompose(corpus.random_connected_graph(55, 15, 0.3))
    for k in range(dec.n):
        col = dec.V[:, k]
        j = int(np.argmax(np.abs(col)))  # argmax takes the lowest index on ties
        assert col[j] > 0


def test_outputs_are_read_only():
    _, dec = decompose(corpus.cycle_graph(5))
    with pytest.raises(ValueError):
        dec.mu[0] = 1.0
    with pytest.raises(ValueError):
        dec.V[0, 0] = 1.0


# --- path identity ----------------------------------------------------------


def test_path_identity_grid_golden():
    g = corpus.reference_grid()
    _, dec = decompose(g)
    a, c = g.index_of("a0"), g.index_of("b2")
    assert spectral_path_identity(dec, a, c, 3) == pytest.approx(3.0, abs=1e-8)


@pytest.mark.parametrize("seed", range(5))
def test_path_identity_recovers_geodesic_counts(seed):
    g = corpus.random_connected_graph(500 + seed, 12, 0.3)
    L, dec = decompose(g)
    for x in range(0, g.n, 4):
        profile = bfs_profile(g, x)
        for y in range(g.n):
            d = profile.dist[y]
            got = spectral_path_identity(dec, x, y, d)
            assert got == pytest.approx(profile.geodesic_count[y], abs=1e-6 * L.frobenius**max(d, 1))
            for k in range(d):
                below = spectral_path_identity(dec, x, y, k)
                assert abs(below) <= 1e-8 * L.frobenius ** max(k, 1)
