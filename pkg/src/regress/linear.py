"""Ordinary least squares with an intercept: simple and multiple regression."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import QrFactors, _frozen, as_matrix, as_vector, lstsq
from .errors import DegenerateTarget, ShapeError, UnderDetermined

# residuals this small relative to the target count as an exact fit
PERFECT_FIT_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class LinearFit:
    """Intercept and per-feature slopes of a fitted linear model.

    ``residuals`` are ``y - y_hat`` on the training data, in sample order.
    """

    intercept: float
    coefficients: np.ndarray
    feature_names: tuple[str, ...]
    residuals: np.ndarray
    n_samples: int

    def __post_init__(self):
        if len(self.coefficients) != len(self.feature_names):
            raise ShapeError("one feature name is required per coefficient")
        if len(self.residuals) != self.n_samples:
            raise ShapeError("residual count must equal n_samples")

    @property
    def coefficient_map(self) -> dict[str, float]:
        return {name: float(c) for name, c in zip(self.feature_names, self.coefficients)}


@dataclass(frozen=True)
class FitReport:
    r_squared: float
    mse: float
    residual_max_abs: float


def design_matrix(x: np.ndarray) -> np.ndarray:
    """Prepend a column of ones to the feature matrix ``x``."""
    return np.hstack([np.ones((x.shape[0], 1)), x])


def _from_design(design: np.ndarray, y: np.ndarray, names: Sequence[str]) -> tuple[LinearFit, QrFactors]:
    beta, factors = lstsq(design, y)
    residuals = y - design @ beta
    fit = LinearFit(
        intercept=float(beta[0]),
        coefficients=_frozen(np.array(beta[1:])),
        feature_names=tuple(names),
        residuals=_frozen(residuals),
        n_samples=int(y.shape[0]),
    )
    return fit, factors


def fit_multiple(x, y, names: Sequence[str] | None = None) -> LinearFit:
    """Fit ``y = b0 + x @ b`` by least squares.

    Parameters
    ----------
    x : array_like, shape (n_samples, n_features)
        Feature matrix; a 1-D array is treated as a single feature.
    y : array_like, shape (n_samples,)
    names : sequence of str, optional
        Feature labels; defaults to ``x1 .. xn``.

    Raises
    ------
    UnderDetermined
        Fewer samples than parameters (features + intercept).
    RankDeficient
        The augmented design ``[1 | x]`` is not full column rank.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    x = as_matrix(x)
    y = as_vector(y)
    n, p = x.shape
    if n != y.shape[0]:
        raise ShapeError(f"{n} feature rows but {y.shape[0]} targets")
    if n < p + 1:
        raise UnderDetermined(f"{n} samples cannot determine {p + 1} parameters")
    if names is None:
        names = [f"x{j + 1}" for j in range(p)]
    if len(names) != p:
        raise ShapeError(f"{len(names)} names given for {p} features")
    return _from_design(design_matrix(x), y, names)[0]


def fit_simple(x, y) -> LinearFit:
    """Fit the straight line ``y = b0 + b1 * x``."""
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] < 2 or y.shape[0] < 2:
        raise UnderDetermined("a line needs at least two samples")
    return fit_multiple(x[:, None], y, ["x"])


def predict(fit: LinearFit, x) -> np.ndarray:
    """Evaluate ``b0 + sum_j b_j x_ij`` for every row of ``x``.

    For a single-feature fit ``x`` may be given as a 1-D array of samples.
    """
    x = np.asarray(x, dtype=float)
    k = len(fit.coefficients)
    if x.ndim <= 1 and k == 1:
        x = x.reshape(-1, 1)
    elif x.ndim == 1 and k == 0:
        x = x.reshape(-1, 0)
    x = as_matrix(x)
    if x.shape[1] != k:
        raise ShapeError(f"fit has {k} coefficients but x has {x.shape[1]} columns")
    return _frozen(fit.intercept + x @ fit.coefficients)


def diagnostics(fit: LinearFit, y) -> FitReport:
    """R-squared, mean squared error and largest absolute residual of ``fit``.

    A constant target gives ``r_squared = 1`` when the fit is exact and raises
    :class:`DegenerateTarget` otherwise.
    """
    y = as_vector(y)
    if y.shape[0] != fit.n_samples:
        raise ShapeError(f"y has {y.shape[0]} samples, fit has {fit.n_samples}")
    res = np.asarray(fit.residuals)
    ss_res = float(res @ res)
    mse = ss_res / fit.n_samples
    max_abs = float(np.max(np.abs(res))) if res.size else 0.0
    if np.all(y == y[0]):
        if max_abs <= PERFECT_FIT_RTOL * max(abs(y[0]), np.finfo(float).tiny):
            return FitReport(1.0, mse, max_abs)
        raise DegenerateTarget("target is constant and the fit is not exact; r-squared undefined")
    dev = y - y.mean()
    ss_tot = float(dev @ dev)
    return FitReport(1.0 - ss_res / ss_tot, mse, max_abs)
