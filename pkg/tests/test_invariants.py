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
)
from psombor.invariants import (
    abs_determinant,
    estrada_index,
    first_zagreb,
    graph_energy,
    index_bundle,
    isi_index,
    randic_index,
    sombor_index,
    spectral_invariants,
    weight_variance,
)
from psombor.spectral import adjacency_decomposition, sombor_decomposition

P_GRID = (-1.0, 0.5, 1.0, 2.0, 3.0)


def test_sombor_index_k4():
    # closed form for complete graphs: 2^(1/p - 1) n (n-1)^2
    assert sombor_index(complete_graph(4), 2.0) == pytest.approx(18 * math.sqrt(2), rel=1e-12)


def test_sombor_index_p4():
    expected = 2 * math.sqrt(5) + math.sqrt(8)
    assert sombor_index(path_graph(4), 2.0) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(7.300563, abs=1e-6)


def test_sombor_index_p_minus_one_is_isi():
    for seed in range(10):
        g = random_gnm(7, 9, seed)
        assert sombor_index(g, -1.0) == pytest.approx(isi_index(g), rel=1e-12)


def test_sombor_index_p_one_is_first_zagreb():
    for seed in range(10):
        g = random_gnm(7, 11, seed)
        assert sombor_index(g, 1.0) == pytest.approx(first_zagreb(g), rel=1e-12)


def test_sombor_rejects_p_zero():
    with pytest.raises(ValueError):
        sombor_index(path_graph(3), 0.0)


def test_classical_indices_k3():
    g = complete_graph(3)
    assert first_zagreb(g) == 12
    assert isi_index(g) == pytest.approx(3.0)
    assert randic_index(g) == pytest.approx(1.5)


def test_classical_indices_p3():
    g = path_graph(3)
    assert first_zagreb(g) == 6
    assert isi_index(g) == pytest.approx(4.0 / 3.0)
    assert randic_index(g) == pytest.approx(math.sqrt(2), rel=1e-12)


def test_classical_indices_star():
    g = star_graph(4)
    assert first_zagreb(g) == 12
    assert isi_index(g) == pytest.approx(2.25)
    assert randic_index(g) == pytest.approx(math.sqrt(3), rel=1e-12)


def test_weight_variance_p3_zero():
    assert weight_variance(path_graph(3), 2.0) == pytest.approx(0.0, abs=1e-15)


def test_weight_variance_regular_zero():
    for g in (cycle_graph(6), complete_graph(5)):
        for p in P_GRID:
            assert weight_variance(g, p) == pytest.approx(0.0, abs=1e-12)


def test_weight_variance_p4_identity():
    g = path_graph(4)
    sigma_sq = weight_variance(g, 2.0)
    assert sigma_sq == pytest.approx(0.077976, abs=1e-6)
    n2 = 36.0
    m = 3
    assert math.sqrt(0.5 * m * n2 - m * m * sigma_sq) == pytest.approx(
        sombor_index(g, 2.0), rel=1e-10)


def test_weight_variance_identity_random():
    from psombor.spectral import moments_closed_form
    for seed in range(10):
        g = random_gnm(8, 13, seed)
        for p in P_GRID:
            sigma_sq = weight_variance(g, p)
            n2 = moments_closed_form(g, p).n2
            lhs = math.sqrt(0.5 * g.m * n2 - g.m ** 2 * sigma_sq)
            assert lhs == pytest.approx(sombor_index(g, p), rel=1e-10)


def test_weight_variance_empty_graph():
    assert weight_variance(Graph(3), 2.0) is None


def test_index_bundle_serializes():
    bundle = index_bundle(path_graph(4), 2.0)
    d = bundle.to_dict()
    assert d["p"] == 2.0 and d["so_p"] == pytest.approx(7.300563, abs=1e-6)


def test_spectral_invariants_k3():
    inv = spectral_invariants(sombor_decomposition(complete_graph(3), 2.0))
    assert inv.energy == pytest.approx(8 * math.sqrt(2), rel=1e-12)
    assert inv.radius == pytest.approx(4 * math.sqrt(2), rel=1e-12)
    assert inv.spread == pytest.approx(6 * math.sqrt(2), rel=1e-12)


def test_spectral_invariants_star():
    inv = spectral_invariants(sombor_decomposition(star_graph(4), 2.0))
    r30 = math.sqrt(30)
    assert inv.energy == pytest.approx(2 * r30, rel=1e-12)
    assert inv.estrada == pytest.approx(math.exp(r30) + 2 + math.exp(-r30), rel=1e-12)


def test_spectral_invariants_empty():
    inv = spectral_invariants(sombor_decomposition(Graph(5), 2.0))
    assert inv.energy == 0.0 and inv.estrada == pytest.approx(5.0)
    assert inv.radius == 0.0 and inv.abs_det == 0.0


def test_abs_det_snaps_to_zero():
    dec = sombor_decomposition(star_graph(4), 2.0)  # singular matrix
    assert abs_determinant(dec) == 0.0


def test_abs_det_matches_numpy():
    from psombor.spectral import build_sombor_matrix
    compared = 0
    for seed in range(6):
        g = random_gnm(7, 12, seed)
        dec = sombor_decomposition(g, 2.0)
        if dec.inertia[1] > 0:  # singular: both routes produce noise near 0
            continue
        det = abs(np.linalg.det(build_sombor_matrix(g, 2.0)))
        assert abs_determinant(dec) == pytest.approx(det, rel=1e-8)
        compared += 1
    assert compared >= 3


def test_energy_additive_over_disjoint_union():
    g1 = cycle_graph(5)
    g2 = path_graph(4)
    union = Graph(9, list(g1.edges()) + [(u + 5, v + 5) for u, v in g2.edges()])
    for p in (1.0, 2.0):
        d1 = sombor_decomposition(g1, p)
        d2 = sombor_decomposition(g2, p)
        du = sombor_decomposition(union, p)
        assert graph_energy(du) == pytest.approx(graph_energy(d1) + graph_energy(d2), rel=1e-10)
        assert estrada_index(du) == pytest.approx(
            estrada_index(d1) + estrada_index(d2), rel=1e-10)
        assert du.radius == pytest.approx(max(d1.radius, d2.radius), rel=1e-10)


def test_regular_energy_scaling():
    # k-regular: energy scales the adjacency energy by 2^(1/p) k
    for g, k in ((cycle_graph(8), 2), (complete_graph(6), 5)):
        adj_energy = graph_energy(adjacency_decomposition(g))
        for p in P_GRID:
            energy = graph_energy(sombor_decomposition(g, p))
            assert energy == pytest.approx(2.0 ** (1.0 / p) * k * adj_energy, rel=1e-9)


def test_isi_comparison_p_at_least_one():
    # index >= 2^(1/p + 1) ISI for p >= 1, equality exactly on regular graphs
    for seed in range(10):
        g = random_gnm(8, 12, seed)
        for p in (1.0, 2.0, 3.0):
            assert sombor_index(g, p) >= 2.0 ** (1.0 / p + 1) * isi_index(g) - 1e-10
    for g in (cycle_graph(6), complete_graph(5)):
        for p in (1.0, 2.0, 3.0):
            assert sombor_index(g, p) == pytest.approx(
                2.0 ** (1.0 / p + 1) * isi_index(g), rel=1e-12)


def test_estrada_convexity_floor():
    # sum of exponentials is at least n * exp(mean eigenvalue) = n
    for seed in range(5):
        g = random_gnm(7, 10, seed)
        dec = sombor_decomposition(g, 2.0)
        assert estrada_index(dec) >= g.n - 1e-12


def test_energy_at_least_radius():
    for seed in range(5):
        g = random_gnm(7, 8, seed)
        dec = sombor_decomposition(g, 2.0)
        if g.m >= 1:
            assert graph_energy(dec) >= dec.radius - 1e-12
