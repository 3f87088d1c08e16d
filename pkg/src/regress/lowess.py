"""LOWESS: locally weighted linear smoothing with bisquare robustness passes."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import _frozen, as_vector
from .errors import InvalidFrac, ShapeError, UnderDetermined

MIN_WINDOW = 3
LOCAL_RANK_TOL = 1e-12
# a median |residual| at or below this fraction of max|y| counts as an exact fit
PERFECT_FIT_RTOL = 1e-12


@dataclass(frozen=True)
class LowessConfig:
    """Smoothing span and number of robustifying passes.

    ``frac`` is the share of samples in each local window. The window holds
    ``k = max(3, ceil(frac * n))`` points, clamped to ``n``.
    """

    frac: float = 2.0 / 3.0
    robust_iters: int = 3

    def __post_init__(self):
        if not (0.0 < self.frac <= 1.0):
            raise InvalidFrac(f"frac must lie in (0, 1], got {self.frac!r}")
        if self.robust_iters < 0 or int(self.robust_iters) != self.robust_iters:
            raise ValueError(f"robust_iters must be a non-negative integer, got {self.robust_iters!r}")

    def window(self, n: int) -> int:
        # rounding keeps e.g. frac=0.3, n=10 at k=3 despite float noise in the product
        return min(n, max(MIN_WINDOW, math.ceil(round(self.frac * n, 9))))


@dataclass(frozen=True, eq=False)
class LowessResult:
    x_sorted: np.ndarray
    y_smoothed: np.ndarray
    original_order_smoothed: np.ndarray
    config: LowessConfig


def tricube(u):
    u = np.abs(np.asarray(u, dtype=float))
    out = np.where(u < 1.0, (1.0 - u**3) ** 3, 0.0)
    return float(out) if out.ndim == 0 else out


def bisquare(u):
    u = np.asarray(u, dtype=float)
    out = np.where(np.abs(u) < 1.0, (1.0 - u**2) ** 2, 0.0)
    return float(out) if out.ndim == 0 else out


def _local_fit(x: np.ndarray, y: np.ndarray, i: int, k: int, robust: np.ndarray) -> float:
    dist = np.abs(x - x[i])
    nearest = np.argsort(dist, kind="stable")[:k]
    d = dist[nearest[-1]]
    if d == 0.0:
        return float(np.mean(y[nearest]))
    # points beyond the k-th neighbour get zero tricube weight automatically
    kernel = tricube(dist / d)
    w = kernel * robust
    sw = w.sum()
    if sw > 0.0:
        xm = (w @ x) / sw
        ym = (w @ y) / sw
        dx = x - xm
        sxx = w @ (dx * dx)
        if sxx > LOCAL_RANK_TOL * sw * d * d:
            slope = (w @ (dx * (y - ym))) / sxx
            return float(ym + slope * (x[i] - xm))
    return float((kernel @ y) / kernel.sum())


def smooth(x, y, cfg: LowessConfig | None = None) -> LowessResult:
    """Smooth ``y`` against ``x``.

    Each sample gets a weighted straight-line fit over its ``k`` nearest
    neighbours (tricube weights on distance scaled by the k-th neighbour's
    distance), evaluated at that sample. Each robustness pass then multiplies
    the weights by ``bisquare(r / (6 * median|r|))`` of the current residuals;
    passes stop early once the median absolute residual is zero (to within
    ``1e-12 * max|y|``, so rounding noise cannot drive the reweighting).

    Degenerate windows fall back gracefully: identical x values give the plain
    window mean, a singular weighted system gives the tricube-weighted mean.
    """
    cfg = cfg or LowessConfig()
    x = as_vector(x)
    y = as_vector(y)
    if x.shape != y.shape:
        raise ShapeError(f"{x.shape[0]} x samples but {y.shape[0]} targets")
    n = x.shape[0]
    if n < 2:
        raise UnderDetermined("LOWESS needs at least two samples")
    order = np.argsort(x, kind="stable")
    xs = x[order]
    ys = y[order]
    k = cfg.window(n)

    robust = np.ones(n)
    fitted = np.empty(n)
    for it in range(cfg.robust_iters + 1):
        for i in range(n):
            fitted[i] = _local_fit(xs, ys, i, k, robust)
        if it == cfg.robust_iters:
            break
        resid = ys - fitted
        scale = np.median(np.abs(resid))
        if scale <= PERFECT_FIT_RTOL * np.max(np.abs(ys)):
            break
        robust = bisquare(resid / (6.0 * scale))

    original = np.empty(n)
    original[order] = fitted
    return LowessResult(_frozen(xs.copy()), _frozen(fitted.copy()), _frozen(original), cfg)
