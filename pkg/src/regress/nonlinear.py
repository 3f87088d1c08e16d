"""Nonlinear least squares via Levenberg-Marquardt.

Models are described by :class:`ParameterizedModel`; the exponential-growth
curve ``a * exp(b * x) + c`` ships ready-made as :data:`EXPONENTIAL`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from .core import _frozen, as_vector, solve_least_squares
from .errors import EvalDomain, InvalidConfig, RankDeficient, ShapeError, UnderDetermined

EXP_OVERFLOW_GUARD = 700.0
SINGULAR_LAMBDA = 1e8

ModelFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class ParameterizedModel:
    """A curve ``f(params, x)`` with ``arity`` parameters.

    ``evaluate`` and ``analytic_jacobian`` are vectorised over ``x``: given a
    parameter vector and an array of samples they return one prediction per
    sample and an ``(n_samples, arity)`` matrix of partials respectively.
    Either may raise :class:`EvalDomain` outside the model's domain.
    """

    arity: int
    evaluate: ModelFn
    analytic_jacobian: Optional[ModelFn] = None
    name: str = "model"
    param_names: tuple[str, ...] = ()

    def __call__(self, params, xs) -> np.ndarray:
        out = np.asarray(self.evaluate(np.asarray(params, dtype=float), np.asarray(xs, dtype=float)), dtype=float)
        if not np.all(np.isfinite(out)):
            raise EvalDomain(f"{self.name} produced non-finite output")
        return out


class ExponentialParams(NamedTuple):
    a: float
    b: float
    c: float


def eval_exponential(p: ExponentialParams, x):
    """``a * exp(b * x) + c``; raises :class:`EvalDomain` when ``b * x > 700``."""
    a, b, c = p
    bx = b * np.asarray(x, dtype=float)
    if np.any(bx > EXP_OVERFLOW_GUARD):
        raise EvalDomain(f"b*x = {np.max(bx):.6g} exceeds the overflow guard {EXP_OVERFLOW_GUARD:g}")
    out = a * np.exp(bx) + c
    return float(out) if np.ndim(out) == 0 else out


def _exponential_jacobian(params: np.ndarray, xs: np.ndarray) -> np.ndarray:
    a, b, _ = params
    bx = b * xs
    if np.any(bx > EXP_OVERFLOW_GUARD):
        raise EvalDomain("b*x exceeds the overflow guard")
    e = np.exp(bx)
    return np.column_stack([e, a * xs * e, np.ones_like(xs)])


EXPONENTIAL = ParameterizedModel(
    arity=3,
    evaluate=lambda p, x: eval_exponential(ExponentialParams(*p), x),
    analytic_jacobian=_exponential_jacobian,
    name="exponential",
    param_names=("a", "b", "c"),
)

AFFINE = ParameterizedModel(
    arity=2,
    evaluate=lambda p, x: p[0] + p[1] * x,
    analytic_jacobian=lambda p, x: np.column_stack([np.ones_like(x), x]),
    name="affine",
    param_names=("intercept", "slope"),
)


def numerical_jacobian(model: ParameterizedModel, params, xs, step: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian with per-parameter step ``step * max(1, |p_j|)``."""
    params = as_vector(params)
    xs = as_vector(xs)
    jac = np.empty((xs.shape[0], params.shape[0]))
    for j in range(params.shape[0]):
        h = step * max(1.0, abs(params[j]))
        up = params.copy()
        down = params.copy()
        up[j] += h
        down[j] -= h
        jac[:, j] = (model(up, xs) - model(down, xs)) / (2.0 * h)
    return _frozen(jac)


@dataclass(frozen=True)
class LMConfig:
    lambda0: float = 1e-3
    nu: float = 10.0
    max_iter: int = 200
    tol_cost: float = 1e-10
    tol_grad: float = 1e-10
    tol_step: float = 1e-12
    jacobian_step: float = 1e-6

    def __post_init__(self):
        if not self.lambda0 > 0:
            raise InvalidConfig("lambda0 must be positive")
        if not self.nu > 1:
            raise InvalidConfig("nu must exceed 1")
        if self.max_iter < 0:
            raise InvalidConfig("max_iter must be non-negative")
        for name in ("tol_cost", "tol_grad", "tol_step", "jacobian_step"):
            if not getattr(self, name) > 0:
                raise InvalidConfig(f"{name} must be positive")


class LMStatus(str, enum.Enum):
    CONVERGED = "Converged"
    MAX_ITER = "MaxIterReached"
    SINGULAR_STEP = "SingularStep"


@dataclass(frozen=True, eq=False)
class LMResult:
    """Outcome of :func:`levenberg_marquardt`.

    ``cost_trace`` holds the SSE at the starting point followed by the SSE
    after every accepted step. ``reason`` names the tolerance that fired when
    ``status`` is ``CONVERGED`` (``"cost"``, ``"gradient"`` or ``"step"``).
    """

    params: np.ndarray
    final_sse: float
    iterations: int
    status: LMStatus
    cost_trace: tuple[float, ...] = field(default=())
    reason: str | None = None

    @property
    def converged(self) -> bool:
        return self.status is LMStatus.CONVERGED


def levenberg_marquardt(
    model: ParameterizedModel,
    xs,
    ys,
    p0=None,
    cfg: LMConfig | None = None,
) -> LMResult:
    """Minimise ``sum_i (ys_i - f(p, xs_i))**2`` starting from ``p0``.

    Each iteration solves the damped system ``(J^T J + lam I) dp = J^T r`` as
    the stacked least-squares problem ``[J; sqrt(lam) I] dp ~ [r; 0]``.
    Accepted steps divide ``lam`` by ``nu``; rejected steps (higher SSE or a
    trial point outside the model's domain) multiply it. Every trial step
    counts towards ``max_iter``.

    ``p0`` defaults to all ones. :class:`EvalDomain` at ``p0`` propagates, as
    does an SSE at ``p0`` too large to represent.
    """
    cfg = cfg or LMConfig()
    xs = as_vector(xs)
    ys = as_vector(ys)
    if xs.shape != ys.shape:
        raise ShapeError(f"{xs.shape[0]} x samples but {ys.shape[0]} targets")
    if xs.shape[0] < model.arity:
        raise UnderDetermined(f"{xs.shape[0]} samples cannot determine {model.arity} parameters")
    p = np.ones(model.arity) if p0 is None else np.array(as_vector(p0))
    if p.shape[0] != model.arity:
        raise ShapeError(f"p0 has {p.shape[0]} entries, model needs {model.arity}")

    if model.analytic_jacobian is not None:
        def jacobian(params):
            return np.asarray(model.analytic_jacobian(params, xs), dtype=float)
    else:
        def jacobian(params):
            return numerical_jacobian(model, params, xs, cfg.jacobian_step)

    r = ys - model(p, xs)
    with np.errstate(over="ignore"):
        sse = float(r @ r)
    if not math.isfinite(sse):
        raise EvalDomain("sum of squared residuals overflows at the starting point")
    trace = [sse]
    lam = cfg.lambda0
    iterations = 0

    def done(status, reason=None):
        return LMResult(_frozen(p.copy()), sse, iterations, status, tuple(trace), reason)

    if cfg.max_iter == 0:
        return done(LMStatus.MAX_ITER)

    jac = jacobian(p)
    eye = np.eye(model.arity)
    zeros = np.zeros(model.arity)
    while iterations < cfg.max_iter:
        grad = jac.T @ r
        if np.max(np.abs(grad)) < cfg.tol_grad:
            return done(LMStatus.CONVERGED, "gradient")
        iterations += 1
        try:
            delta = solve_least_squares(np.vstack([jac, math.sqrt(lam) * eye]), np.concatenate([r, zeros]))
        except RankDeficient:
            if lam >= SINGULAR_LAMBDA:
                return done(LMStatus.SINGULAR_STEP)
            lam *= cfg.nu
            continue
        if np.linalg.norm(delta) < cfg.tol_step:
            return done(LMStatus.CONVERGED, "step")

        trial = p + delta
        try:
            r_trial = ys - model(trial, xs)
        except EvalDomain:
            lam *= cfg.nu
            continue
        with np.errstate(over="ignore", invalid="ignore"):
            sse_trial = float(r_trial @ r_trial)
        if sse_trial < sse:
            rel_drop = (sse - sse_trial) / sse
            p, r, sse = trial, r_trial, sse_trial
            trace.append(sse)
            lam /= cfg.nu
            if rel_drop < cfg.tol_cost:
                return done(LMStatus.CONVERGED, "cost")
            jac = jacobian(p)
        else:
            lam *= cfg.nu
    return done(LMStatus.MAX_ITER)


def fit_exponential(xs, ys, p0=None, cfg: LMConfig | None = None) -> LMResult:
    """Fit ``a * exp(b * x) + c``; ``p0`` defaults to ``(1, 1, 1)``."""
    return levenberg_marquardt(EXPONENTIAL, xs, ys, p0, cfg)
