import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import lowess_exact
from regress.errors import InvalidFrac, UnderDetermined
from regress.lowess import LowessConfig, bisquare, smooth, tricube


@pytest.mark.parametrize("u,expected", [(0.0, 1.0), (1.0, 0.0), (0.5, 0.669921875), (-0.5, 0.669921875), (2.0, 0.0)])
def test_tricube(u, expected):
    assert tricube(u) == expected


@pytest.mark.parametrize("u,expected", [(0.0, 1.0), (1.0, 0.0), (0.5, 0.5625), (-0.5, 0.5625), (-3.0, 0.0)])
def test_bisquare(u, expected):
    assert bisquare(u) == expected


def test_config_validation():
    with pytest.raises(InvalidFrac):
        LowessConfig(frac=0.0)
    with pytest.raises(InvalidFrac):
        LowessConfig(frac=1.2)
    with pytest.raises(ValueError):
        LowessConfig(robust_iters=-1)
    assert LowessConfig().robust_iters == 3


@pytest.mark.parametrize("frac,n,k", [(0.3, 5, 3), (0.3, 10, 3), (0.3, 100, 30), (0.5, 7, 4), (1.0, 2, 2), (0.01, 50, 3)])
def test_window_size(frac, n, k):
    assert LowessConfig(frac).window(n) == k


def test_linear_reproduced_exactly():
    x = np.linspace(0, 10, 11)
    y = 3 * x - 7
    res = smooth(x, y, LowessConfig(frac=1.0, robust_iters=0))
    np.testing.assert_allclose(res.y_smoothed, y, rtol=0, atol=1e-8 * np.abs(y).max())


def test_constant():
    res = smooth([3.0, 1.0, 2.0, 5.0], [4.0] * 4, LowessConfig(0.5))
    np.testing.assert_allclose(res.y_smoothed, 4.0, rtol=1e-15)


def test_house_fixture(house, oracle_values):
    res = smooth(*house, LowessConfig(frac=0.3, robust_iters=3))
    expected = np.array([float(v) for v in oracle_values["lowess_house_frac0.3_iters3"]])
    np.testing.assert_allclose(res.y_smoothed, expected, rtol=1e-10)
    np.testing.assert_array_equal(res.x_sorted, house[0])


def test_result_shape_and_order():
    x = np.array([3.0, 1.0, 2.0, 1.0, 5.0])
    y = np.array([1.0, 2.0, 0.5, 2.5, 4.0])
    res = smooth(x, y, LowessConfig(0.6, 1))
    assert np.all(np.diff(res.x_sorted) >= 0)
    assert len(res.y_smoothed) == len(res.original_order_smoothed) == 5
    order = np.argsort(x, kind="stable")
    np.testing.assert_array_equal(res.original_order_smoothed[order], res.y_smoothed)


def test_tied_x_window_uses_plain_mean():
    x = np.array([1.0, 1.0, 1.0, 1.0, 9.0])
    y = np.array([1.0, 2.0, 3.0, 6.0, 0.0])
    res = smooth(x, y, LowessConfig(frac=0.6, robust_iters=0))
    # k = 3 nearest of a tied point are all at distance 0
    np.testing.assert_allclose(res.y_smoothed[:4], (1 + 2 + 3) / 3)


def test_two_points():
    res = smooth([0.0, 1.0], [1.0, 3.0], LowessConfig(frac=1.0, robust_iters=0))
    np.testing.assert_allclose(res.y_smoothed, [1.0, 3.0])


def test_robust_iterations_resist_outlier():
    x = np.arange(30.0)
    truth = 2 * x + 1
    y = truth + np.random.default_rng(5).normal(scale=0.1, size=30)
    y[15] += 100
    plain = smooth(x, y, LowessConfig(0.4, 0)).y_smoothed
    robust = smooth(x, y, LowessConfig(0.4, 3)).y_smoothed
    clean = np.delete(np.arange(30), 15)
    err_plain = np.max(np.abs(plain[clean] - truth[clean]))
    err_robust = np.max(np.abs(robust[clean] - truth[clean]))
    assert err_plain > 5.0
    assert err_robust < 0.5


def test_errors():
    with pytest.raises(UnderDetermined):
        smooth([1.0], [1.0])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([0.2, 0.3, 0.5, 0.8, 1.0]), st.integers(0, 3))
def test_matches_brute_force_oracle(seed, frac, iters):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, 12))
    x = rng.integers(0, 25, size=n).astype(float)
    y = rng.normal(size=n) * 10
    got = smooth(x, y, LowessConfig(frac, iters)).y_smoothed
    expected = np.array([float(v) for v in lowess_exact(x.tolist(), y.tolist(), frac, iters, exact=False)])
    np.testing.assert_allclose(got, expected, rtol=0, atol=1e-9 * np.abs(y).max())


@settings(max_examples=100, deadline=None)
@given(
    st.integers(0, 2**32 - 1),
    st.floats(0.05, 1.0),
    st.floats(-1e3, 1e3),
    st.floats(-1e3, 1e3),
)
def test_affine_reproduction(seed, frac, alpha, gamma):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-50, 50, size=20)
    y = alpha * x + gamma
    res = smooth(x, y, LowessConfig(frac, 0))
    bound = 1e-8 * max(1.0, abs(alpha) * np.abs(x).max() + abs(gamma))
    assert np.max(np.abs(res.original_order_smoothed - y)) <= bound


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([0.3, 0.4, 0.5]))
def test_interior_values_within_window_range(seed, frac):
    rng = np.random.default_rng(seed)
    n = 21
    x = np.arange(n, dtype=float)
    y = rng.normal(size=n)
    cfg = LowessConfig(frac, 0)
    k = cfg.window(n)
    res = smooth(x, y, cfg)
    half = k // 2
    for i in range(half + 1, n - half - 1):
        lo, hi = i - half, i + half + 1
        window = y[lo:hi]
        assert window.min() <= res.y_smoothed[i] <= window.max()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 3))
def test_permutation_equivariance(seed, iters):
    rng = np.random.default_rng(seed)
    n = 15
    x = rng.permutation(np.linspace(0, 30, n) + rng.uniform(0, 0.5, size=n))
    y = rng.normal(size=n)
    perm = rng.permutation(n)
    a = smooth(x, y, LowessConfig(0.4, iters)).original_order_smoothed
    b = smooth(x[perm], y[perm], LowessConfig(0.4, iters)).original_order_smoothed
    np.testing.assert_allclose(b, a[perm], rtol=0, atol=1e-12)
