import math

import numpy as np
import pytest

from psombor.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_gnm,
    star_graph,
    structure_stats,
)
from psombor.spectral import (
    EigenConvergenceError,
    adjacency_decomposition,
    build_p_laplacian,
    build_sombor_matrix,
    edge_weight,
    eigen_decompose,
    laplacian_decomposition,
    moments_closed_form,
    moments_from_spectrum,
    sombor_decomposition,
)

P_GRID = (-1.0, 0.5, 1.0, 2.0, 3.0)


def test_matrix_k2():
    m = build_sombor_matrix(Graph(2, [(0, 1)]), 2.0)
    assert m[0, 1] == pytest.approx(math.sqrt(2), abs=1e-15)
    assert m[0, 0] == 0.0


def test_matrix_k3():
    m = build_sombor_matrix(complete_graph(3), 2.0)
    off = [m[i, j] for i in range(3) for j in range(3) if i != j]
    assert all(x == pytest.approx(2 * math.sqrt(2), abs=1e-15) for x in off)


def test_matrix_p3_isi_weights():
    # p = -1 entries are d_i d_j / (d_i + d_j)
    m = build_sombor_matrix(path_graph(3), -1.0)
    assert m[0, 1] == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert m[1, 2] == pytest.approx(2.0 / 3.0, abs=1e-15)


def test_matrix_rejects_p_zero():
    with pytest.raises(ValueError):
        build_sombor_matrix(path_graph(3), 0.0)
    with pytest.raises(ValueError):
        edge_weight(2, 3, 0.0)


def test_half_sum_equals_index():
    from psombor.invariants import sombor_index
    for seed in range(5):
        g = random_gnm(7, 10, seed)
        for p in P_GRID:
            m = build_sombor_matrix(g, p)
            assert m.sum() / 2.0 == pytest.approx(sombor_index(g, p), rel=1e-12)


def test_laplacian_k2():
    lap = build_p_laplacian(Graph(2, [(0, 1)]), 2.0)
    r2 = math.sqrt(2)
    assert np.allclose(lap, [[r2, -r2], [-r2, r2]], atol=1e-15)


def test_laplacian_star_diagonal():
    lap = build_p_laplacian(star_graph(4), 2.0)
    r10 = math.sqrt(10)
    assert np.allclose(np.diag(lap), [3 * r10, r10, r10, r10], atol=1e-12)


def test_laplacian_rows_sum_to_zero():
    for seed in range(5):
        g = random_gnm(8, 11, seed)
        for p in P_GRID:
            lap = build_p_laplacian(g, p)
            assert np.abs(lap.sum(axis=1)).max() < 1e-10


# --- eigensolver ---

def test_eigen_k3():
    dec = sombor_decomposition(complete_graph(3), 2.0)
    expected = [4 * math.sqrt(2), -2 * math.sqrt(2), -2 * math.sqrt(2)]
    assert np.abs(dec.eigenvalues - expected).max() < 1e-12


def test_eigen_star():
    dec = sombor_decomposition(star_graph(4), 2.0)
    r30 = math.sqrt(30)
    assert np.abs(dec.eigenvalues - [r30, 0.0, 0.0, -r30]).max() < 1e-12
    assert dec.inertia == (1, 2, 1)


def test_eigen_p4_quartic_roots():
    dec = sombor_decomposition(path_graph(4), 2.0)
    hi = math.sqrt(9 + math.sqrt(56))
    lo = math.sqrt(9 - math.sqrt(56))
    assert np.abs(dec.eigenvalues - [hi, lo, -lo, -hi]).max() < 1e-12


def test_eigen_trace_identity():
    for seed in range(10):
        g = random_gnm(8, 12, seed)
        for p in (1.0, 2.0):
            m = build_sombor_matrix(g, p)
            dec = eigen_decompose(m, kind="p_sombor", p=p)
            assert dec.eigenvalues.sum() == pytest.approx(np.trace(m), abs=1e-9 * dec.scale)


def test_eigen_matches_numpy_oracle():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(2, 20))
        a = rng.standard_normal((n, n))
        a = a + a.T
        dec = eigen_decompose(a)
        ref = np.sort(np.linalg.eigvalsh(a))[::-1]
        assert np.abs(dec.eigenvalues - ref).max() < 1e-10 * dec.scale


def test_eigenvector_residuals():
    for seed in range(5):
        g = random_gnm(9, 14, seed)
        for p in P_GRID:
            m = build_sombor_matrix(g, p)
            dec = eigen_decompose(m, want_vectors=True, kind="p_sombor", p=p)
            fro = np.linalg.norm(m)
            for i in range(g.n):
                v = dec.eigenvectors[:, i]
                assert np.linalg.norm(m @ v - dec.eigenvalues[i] * v) <= 1e-10 * max(1.0, fro)
            # orthonormality
            gram = dec.eigenvectors.T @ dec.eigenvectors
            assert np.abs(gram - np.eye(g.n)).max() < 1e-12


def test_eigen_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        eigen_decompose(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_eigen_rejects_nonfinite():
    with pytest.raises(ValueError, match="finite"):
        eigen_decompose(np.array([[0.0, math.inf], [math.inf, 0.0]]))


def test_convergence_error_carries_residual():
    err = EigenConvergenceError(1e-3, 100)
    assert err.residual == 1e-3 and "100 sweeps" in str(err)


def test_distinct_clustering():
    dec = sombor_decomposition(star_graph(4), 2.0)
    values = [v for v, _ in dec.distinct]
    mults = [m for _, m in dec.distinct]
    assert len(values) == 3 and mults == [1, 2, 1]


def test_regular_scaling_law():
    # for k-regular graphs the weighted matrix is 2^(1/p) k times adjacency
    for g, k in ((cycle_graph(6), 2), (complete_graph(5), 4)):
        adec = adjacency_decomposition(g)
        for p in P_GRID:
            sdec = sombor_decomposition(g, p)
            scale = 2.0 ** (1.0 / p) * k
            assert np.abs(sdec.eigenvalues - scale * adec.eigenvalues).max() < 1e-9 * scale


# --- Laplacian spectrum properties ---

def test_laplacian_psd_and_zero():
    for seed in range(8):
        g = random_gnm(8, 10, seed)
        for p in P_GRID:
            dec = laplacian_decomposition(g, p)
            assert dec.eigenvalues[-1] >= -1e-8 * dec.scale
            assert abs(dec.eigenvalues[-1]) <= 1e-8 * dec.scale


def test_laplacian_zero_multiplicity_equals_components():
    from psombor.graphs import connected_components
    for seed in range(8):
        g = random_gnm(8, 9, seed)
        for p in (1.0, 2.0):
            dec = laplacian_decomposition(g, p)
            assert dec.inertia[1] == len(connected_components(g))


def test_laplacian_connected_simple_zero():
    g = cycle_graph(7)
    for p in P_GRID:
        dec = laplacian_decomposition(g, p)
        assert dec.inertia[1] == 1
        assert dec.distinct[-1][1] == 1


def _rayleigh_quotient(g, p, omega):
    from psombor.spectral import build_sombor_matrix
    m = build_sombor_matrix(g, p)
    num = sum(m[i, j] * (omega[i] - omega[j]) ** 2 for i, j in g.edges())
    den = sum((omega[i] - omega[j]) ** 2 for i in range(g.n) for j in range(g.n))
    return 2 * g.n * num / den


def test_rayleigh_sandwich():
    # quotient of any non-constant vector sits between the second-smallest
    # and largest Laplacian eigenvalues for connected graphs
    rng = np.random.default_rng(11)
    for seed in range(6):
        g = random_gnm(7, 12, seed * 7 + 1)
        if not structure_stats(g).is_connected:
            continue
        for p in (1.0, 2.0, -1.0):
            dec = laplacian_decomposition(g, p)
            eta_max = dec.eigenvalues[0]
            eta_second = dec.eigenvalues[-2]
            for _ in range(4):
                omega = rng.standard_normal(g.n)
                q = _rayleigh_quotient(g, p, omega)
                assert eta_second - 1e-8 * dec.scale <= q <= eta_max + 1e-8 * dec.scale


# --- moments ---

def test_moments_k3():
    mom = moments_closed_form(complete_graph(3), 2.0)
    assert mom.n0 == 3 and mom.n1 == 0
    assert mom.n2 == pytest.approx(48.0, rel=1e-12)
    assert mom.n3 == pytest.approx(6 * (2 * math.sqrt(2)) ** 3, rel=1e-12)
    assert mom.n4 == pytest.approx(1152.0, rel=1e-12)


def test_moments_p3():
    mom = moments_closed_form(path_graph(3), 2.0)
    assert mom.n2 == pytest.approx(20.0, rel=1e-12)
    assert mom.n3 == 0.0
    assert mom.n4 == pytest.approx(200.0, rel=1e-12)


def test_forest_has_zero_n3():
    from psombor.extremal import enumerate_trees
    for t in enumerate_trees(7).trees:
        assert moments_closed_form(t, 2.0).n3 == 0.0


def test_moment_routes_agree():
    for seed in range(30):
        g = random_gnm(8, 12, seed)
        for p in P_GRID:
            mom = moments_closed_form(g, p)
            dec = sombor_decomposition(g, p)
            for k in range(5):
                spectral = moments_from_spectrum(dec, k)
                assert abs(spectral - mom[k]) <= 1e-8 * max(1.0, abs(mom[k]))


def test_moment_k0_is_n():
    dec = sombor_decomposition(random_gnm(6, 7, 3), 2.0)
    assert moments_from_spectrum(dec, 0) == 6.0


def test_decomposition_serializes():
    dec = sombor_decomposition(path_graph(4), 2.0)
    d = dec.to_dict()
    assert d["kind"] == "p_sombor" and len(d["eigenvalues"]) == 4
    assert sum(m for _, m in d["distinct"]) == 4
