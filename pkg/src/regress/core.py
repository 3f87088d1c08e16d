"""Dense matrix helpers and the Householder-QR least-squares solver.

Matrices and vectors are plain float64 numpy arrays. The ``as_matrix`` and
``as_vector`` constructors validate shape and finiteness and hand back
read-only copies, so every value leaving this module is immutable.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NonFiniteError, RankDeficient, ShapeError

RANK_TOL = 1e-12


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def as_matrix(a) -> np.ndarray:
    """Validate ``a`` as a finite 2-D float matrix and return a read-only copy."""
    arr = np.array(a, dtype=float)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got {arr.ndim}-D input")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("matrix contains NaN or infinite entries")
    return _frozen(arr)


def as_vector(v) -> np.ndarray:
    """Validate ``v`` as a finite 1-D float vector and return a read-only copy."""
    arr = np.array(v, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-D vector, got {arr.ndim}-D input")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("vector contains NaN or infinite entries")
    return _frozen(arr)


def _norm(x: np.ndarray) -> float:
    # scaled so tiny or huge entries neither underflow nor overflow when squared
    top = np.max(np.abs(x)) if x.size else 0.0
    if top == 0.0:
        return 0.0
    y = x / top
    return float(top * np.sqrt(y @ y))


class QrFactors(NamedTuple):
    q: np.ndarray  # m x n, orthonormal columns
    r: np.ndarray  # n x n, upper triangular, non-negative diagonal


def qr_decompose(a) -> QrFactors:
    """Thin Householder QR of an ``m x n`` matrix with ``m >= n``.

    Reflections are sign-normalised afterwards so that ``diag(r) >= 0``;
    entries of ``r`` below the diagonal are exact zeros.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        raise ShapeError(f"QR needs rows >= cols, got {m}x{n}")
    work = a.copy()
    reflectors: list[np.ndarray | None] = []
    for k in range(n):
        x = work[k:, k]
        normx = _norm(x)
        if normx == 0.0:
            reflectors.append(None)
            continue
        alpha = -normx if x[0] >= 0 else normx
        v = x.copy()
        v[0] -= alpha
        v /= _norm(v)
        work[k:, k:] -= 2.0 * np.outer(v, v @ work[k:, k:])
        work[k, k] = alpha
        work[k + 1:, k] = 0.0
        reflectors.append(v)

    r = np.triu(work[:n, :])
    q = np.eye(m, n)
    for k in reversed(range(n)):
        v = reflectors[k]
        if v is not None:
            q[k:, :] -= 2.0 * np.outer(v, v @ q[k:, :])

    signs = np.where(np.diag(r) < 0, -1.0, 1.0)
    r = signs[:, None] * r
    q = q * signs[None, :]
    return QrFactors(_frozen(q), _frozen(r))


def estimate_rank(r, tol: float = RANK_TOL) -> int:
    """Count diagonal entries of ``r`` with ``|r_ii| > tol * max_j |r_jj|``."""
    diag = np.abs(np.diag(np.asarray(r, dtype=float)))
    if diag.size == 0:
        return 0
    top = diag.max()
    if top == 0.0:
        return 0
    return int(np.count_nonzero(diag > tol * top))


def condition_ratio(r) -> float:
    """``max|r_ii| / min|r_ii|``, a lower bound on the condition number of ``r``."""
    diag = np.abs(np.diag(np.asarray(r, dtype=float)))
    if diag.size == 0:
        return 1.0
    lo = diag.min()
    return float("inf") if lo == 0.0 else float(diag.max() / lo)


def condition_number(r) -> float:
    """2-norm condition number of a square triangular factor."""
    r = np.asarray(r, dtype=float)
    if r.size == 0:
        return 1.0
    return float(np.linalg.cond(r))


def back_substitute(r: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    n = r.shape[0]
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        x[i] = (rhs[i] - r[i, i + 1:] @ x[i + 1:]) / r[i, i]
    return x


def lstsq(a, b, tol: float = RANK_TOL) -> tuple[np.ndarray, QrFactors]:
    """Least-squares solve that also returns the QR factors it used."""
    a = as_matrix(a)
    b = as_vector(b)
    m, n = a.shape
    if b.shape[0] != m:
        raise ShapeError(f"rhs has length {b.shape[0]}, matrix has {m} rows")
    if m < n:
        raise ShapeError(f"least squares needs rows >= cols, got {m}x{n}")
    factors = qr_decompose(a)
    rank = estimate_rank(factors.r, tol)
    if rank < n:
        raise RankDeficient(rank, n)
    x = back_substitute(factors.r, factors.q.T @ b)
    return _frozen(x), factors


def solve_least_squares(a, b) -> np.ndarray:
    """Return ``x`` minimising ``||a @ x - b||_2`` for full-column-rank ``a``.

    Raises
    ------
    ShapeError
        If ``b`` does not match ``a`` or ``a`` has fewer rows than columns.
    RankDeficient
        If the estimated rank of ``a`` is below its column count.
    """
    return lstsq(a, b)[0]
