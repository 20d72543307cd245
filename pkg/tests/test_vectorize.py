import numpy as np
import pytest

from extph.datasets import gen_erdos_renyi
from extph.extended import compute_extended_persistence
from extph.graph import Graph
from extph.vectorize import (
    RationalHatParams,
    init_rational_hat_params,
    params_from_json,
    params_to_json,
    rational_hat,
    rational_hat_grad,
    vectorize_barcode,
)


def test_bar_at_center_radius_one():
    params = RationalHatParams([[1.0, 2.0]], [1.0])
    out = rational_hat([(1.0, 2.0)], params)
    assert out.tolist() == [pytest.approx(0.5)]


def test_zero_crossing():
    params = RationalHatParams([[0.0, 0.0]], [2.0])
    out = rational_hat([(1.0, 0.0)], params)  # |p-c|_1 = 1, r = 2
    assert out[0] == pytest.approx(0.0)


def test_empty_barcode_zero_vector():
    params = RationalHatParams(np.zeros((5, 2)), np.ones(5))
    assert rational_hat([], params).tolist() == [0.0] * 5
    grad = rational_hat_grad([], params)
    assert grad.value.tolist() == [0.0] * 5
    assert grad.d_points.shape == (0, 2, 5)


def test_zero_radius_cancels():
    params = RationalHatParams([[0.0, 0.0]], [0.0])
    out = rational_hat([(0.4, 0.8)], params)
    assert out[0] == pytest.approx(0.0)
    grad = rational_hat_grad([(0.4, 0.8)], params)
    assert np.allclose(grad.d_points, 0.0)


def test_far_bars_vanishing_gradient():
    params = RationalHatParams([[0.0, 0.0]], [1.0])
    grad = rational_hat_grad([(500.0, 700.0)], params)
    assert np.all(np.abs(grad.d_points) < 1e-4)
    assert np.all(np.abs(grad.d_centers) < 1e-4)


def _random_config(rng, kinks_margin=1e-3):
    """Random bars/params staying clear of the L1 kinks."""
    while True:
        nb = rng.integers(1, 6)
        k = rng.integers(1, 5)
        pts = rng.uniform(0.0, 3.0, size=(int(nb), 2))
        centers = rng.uniform(0.0, 3.0, size=(int(k), 2))
        radii = rng.uniform(0.1, 2.0, size=int(k))
        x = pts[:, None, :] - centers[None, :, :]
        d = np.abs(x).sum(axis=2)
        if np.min(np.abs(x)) < kinks_margin:
            continue
        if np.min(np.abs(np.abs(radii)[None, :] - d)) < kinks_margin:
            continue
        return pts, RationalHatParams(centers, radii)


def _fd_check(pts, params, h=1e-5):
    grad = rational_hat_grad(pts, params)
    worst = 0.0

    def rel(a, b):
        denom = max(abs(a), abs(b), 1e-8)
        return abs(a - b) / denom

    for b in range(pts.shape[0]):
        for c in range(2):
            for i in range(params.k):
                plus = pts.copy(); plus[b, c] += h
                minus = pts.copy(); minus[b, c] -= h
                fd = (rational_hat(plus, params)[i] - rational_hat(minus, params)[i]) / (2 * h)
                worst = max(worst, rel(fd, grad.d_points[b, c, i]))
    for i in range(params.k):
        for c in range(2):
            cp = params.centers.copy(); cp[i, c] += h
            cm = params.centers.copy(); cm[i, c] -= h
            fd = (
                rational_hat(pts, RationalHatParams(cp, params.radii))[i]
                - rational_hat(pts, RationalHatParams(cm, params.radii))[i]
            ) / (2 * h)
            worst = max(worst, rel(fd, grad.d_centers[i, c]))
        rp = params.radii.copy(); rp[i] += h
        rm = params.radii.copy(); rm[i] -= h
        fd = (
            rational_hat(pts, RationalHatParams(params.centers, rp))[i]
            - rational_hat(pts, RationalHatParams(params.centers, rm))[i]
        ) / (2 * h)
        worst = max(worst, rel(fd, grad.d_radii[i]))
    return worst


def test_gradients_match_finite_differences():
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(40):
        pts, params = _random_config(rng)
        worst = max(worst, _fd_check(pts, params))
    assert worst < 1e-5, f"max relative FD error {worst}"


def test_additivity():
    rng = np.random.default_rng(1)
    params = RationalHatParams(rng.uniform(0, 2, (6, 2)), rng.uniform(0.1, 1, 6))
    a = rng.uniform(0, 2, (4, 2))
    b = rng.uniform(0, 2, (3, 2))
    both = np.vstack([a, b])
    assert np.allclose(rational_hat(both, params), rational_hat(a, params) + rational_hat(b, params))


def test_per_bar_contribution_bounded():
    rng = np.random.default_rng(2)
    for _ in range(200):
        pts = rng.uniform(-5, 5, (1, 2))
        params = RationalHatParams(rng.uniform(-5, 5, (3, 2)), rng.uniform(-2, 2, 3))
        out = rational_hat(pts, params)
        assert np.all(out >= -1.0) and np.all(out <= 1.0)


def test_vectorize_barcode_blocks():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], [0.0, 1.0, 2.0, 3.0])  # a forest
    bc = compute_extended_persistence(g)
    params4 = [init_rational_hat_params([(0.0, 1.0)], k=3, seed=s) for s in range(4)]
    vec = vectorize_barcode(bc, params4)
    assert vec.shape == (12,)
    assert np.all(vec[9:] == 0.0), "empty b1_ext block must be exactly zero"


def test_vectorize_sum_formula_single_center():
    params = RationalHatParams([[0.5, 0.5]], [1.0])
    bars = [(0.5, 0.5)] * 7
    assert rational_hat(bars, params)[0] == pytest.approx(7 * 0.5)


def test_order_independence_exact():
    rng = np.random.default_rng(3)
    pts = rng.uniform(0, 1, (20, 2))
    params = RationalHatParams(rng.uniform(0, 1, (4, 2)), rng.uniform(0.1, 1, 4))
    ref = rational_hat(pts, params)
    for _ in range(5):
        perm = rng.permutation(20)
        assert np.array_equal(rational_hat(pts[perm], params), ref)


def test_end_to_end_permutation_invariance_exact():
    g = gen_erdos_renyi(25, 0.3, seed=4)
    params4 = [init_rational_hat_params([(0.0, 1.0)], k=8, seed=s) for s in range(4)]
    ref = vectorize_barcode(compute_extended_persistence(g), params4)
    rng = np.random.default_rng(5)
    perm = list(rng.permutation(g.num_vertices))
    vals = [0.0] * g.num_vertices
    for old, new in enumerate(perm):
        vals[new] = float(g.vertex_values[old])
    pg = Graph(g.num_vertices, [(perm[u], perm[v]) for u, v in g.edges], vals)
    out = vectorize_barcode(compute_extended_persistence(pg), params4)
    assert np.array_equal(out, ref)


def test_params_json_roundtrip_and_seeding():
    p1 = init_rational_hat_params([(0.0, 1.0), (2.0, 3.0)], k=5, seed=7)
    p2 = init_rational_hat_params([(0.0, 1.0), (2.0, 3.0)], k=5, seed=7)
    assert np.array_equal(p1.centers, p2.centers) and np.array_equal(p1.radii, p2.radii)
    (back,) = params_from_json(params_to_json(p1))
    assert np.array_equal(back.centers, p1.centers)
    assert np.array_equal(back.radii, p1.radii)


def test_params_validation():
    with pytest.raises(ValueError):
        RationalHatParams(np.zeros((0, 2)), np.zeros(0))
    with pytest.raises(ValueError):
        RationalHatParams([[0.0, np.inf]], [1.0])
