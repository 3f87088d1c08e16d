import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regress.core import solve_least_squares
from regress.errors import ConditionWarning, DegreeTooLarge, RankDeficient, UnderDetermined
from regress.polynomial import PolynomialSpec, expand, fit_polynomial, predict_polynomial


def test_expand_powers():
    np.testing.assert_array_equal(expand([2.0], 3), [[1, 2, 4, 8]])
    np.testing.assert_array_equal(expand([1.0, 2.0, 3.0], PolynomialSpec(2)), [[1, 1, 1], [1, 2, 4], [1, 3, 9]])
    np.testing.assert_array_equal(expand([5.0, -1.0], 0), [[1], [1]])


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        PolynomialSpec(31)
    with pytest.raises(ValueError):
        PolynomialSpec(-1)
    assert PolynomialSpec(30).degree == 30


def test_exact_quadratic():
    x = np.array([-1.0, 0.0, 1.0, 2.0])
    fit = fit_polynomial(x, x**2, 2)
    assert fit.intercept == pytest.approx(0.0, abs=1e-10)
    np.testing.assert_allclose(fit.coefficients, [0.0, 1.0], atol=1e-10)
    assert fit.feature_names == ("x^1", "x^2")


def test_degree_zero_is_mean():
    y = np.array([3.0, -1.0, 8.5, 2.0])
    fit = fit_polynomial([1.0, 2.0, 3.0, 4.0], y, 0)
    assert fit.intercept == pytest.approx(y.mean(), rel=1e-12)
    assert fit.coefficients.shape == (0,)


def test_house_degree2_oracle(house, oracle_values):
    sizes, prices = house
    fit = fit_polynomial(sizes, prices, 2)
    expected = [float(v) for v in oracle_values["poly2_house"]]
    got = [fit.intercept, *fit.coefficients]
    # the exact quadratic term is 0, so compare each term at its contribution scale
    term_scale = np.abs(prices).max() / sizes.max() ** np.arange(3)
    assert np.all(np.abs(np.subtract(got, expected)) <= 1e-9 * term_scale)


def test_same_path_as_expand_then_solve(house):
    sizes, prices = house
    beta = solve_least_squares(expand(sizes, 2), prices)
    fit = fit_polynomial(sizes, prices, 2)
    assert [fit.intercept, *fit.coefficients] == list(beta)


def test_underdetermined_and_rank():
    with pytest.raises(UnderDetermined):
        fit_polynomial([1.0, 2.0], [1.0, 2.0], 2)
    with pytest.raises(RankDeficient):
        fit_polynomial([1.0, 1.0, 2.0], [1.0, 2.0, 3.0], 2)


def test_condition_warning():
    sizes = np.array([1000.0, 1200.0, 1500.0, 1800.0, 2000.0, 2100.0])
    with pytest.warns(ConditionWarning):
        fit_polynomial(sizes, np.sin(sizes / 300), 4)


def test_no_warning_when_well_conditioned():
    with warnings.catch_warnings():
        warnings.simplefilter("error", ConditionWarning)
        fit_polynomial(np.linspace(-1, 1, 10), np.linspace(0, 3, 10) ** 2, 3)


def test_predict_polynomial():
    x = np.array([-1.0, 0.0, 1.0, 2.0])
    fit = fit_polynomial(x, 3 - x + 0.5 * x**2, 2)
    np.testing.assert_allclose(predict_polynomial(fit, [4.0]), [3 - 4 + 8], rtol=1e-12)


def test_sse_monotone_in_degree_house(house):
    sizes, prices = house
    sse = []
    for d in range(4):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditionWarning)
            res = fit_polynomial(sizes, prices, d).residuals
        sse.append(float(res @ res))
    scale = float(prices @ prices)
    assert all(b <= a + 1e-6 * scale for a, b in zip(sse, sse[1:]))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_interpolation(n, seed):
    rng = np.random.default_rng(seed)
    x = np.sort(rng.choice(np.linspace(-2, 2, 41), size=n, replace=False))
    y = rng.normal(size=n) * 10
    fit = fit_polynomial(x, y, n - 1)
    assert np.max(np.abs(fit.residuals)) <= 1e-8 * np.abs(y).max()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_sse_monotone_random(seed):
    rng = np.random.default_rng(seed)
    x = np.linspace(-3, 3, 12) + rng.normal(scale=0.05, size=12)
    y = rng.normal(size=12) * 5
    sse = []
    for d in range(6):
        res = fit_polynomial(x, y, d).residuals
        sse.append(float(res @ res))
    scale = float(y @ y)
    assert all(b <= a + 1e-6 * scale for a, b in zip(sse, sse[1:]))
