"""Univariate polynomial regression on the raw monomial basis."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import _frozen, as_vector, condition_number
from .errors import ConditionWarning, DegreeTooLarge, ShapeError, UnderDetermined
from .linear import LinearFit, _from_design, predict

MAX_DEGREE = 30
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class PolynomialSpec:
    degree: int

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.degree!r}")
        if self.degree > MAX_DEGREE:
            raise DegreeTooLarge(f"degree {self.degree} exceeds the cap of {MAX_DEGREE}")


def _spec(spec: PolynomialSpec | int) -> PolynomialSpec:
    return spec if isinstance(spec, PolynomialSpec) else PolynomialSpec(spec)


def expand(x, spec: PolynomialSpec | int) -> np.ndarray:
    """Rows ``(1, x_i, x_i**2, ..., x_i**degree)`` for every sample."""
    spec = _spec(spec)
    x = as_vector(x)
    return _frozen(x[:, None] ** np.arange(spec.degree + 1)[None, :])


def monomial_names(degree: int) -> tuple[str, ...]:
    return tuple(f"x^{p}" for p in range(1, degree + 1))


def fit_polynomial(x, y, spec: PolynomialSpec | int) -> LinearFit:
    """Least-squares polynomial of the given degree.

    The constant term becomes the fit's intercept; the remaining coefficients
    are named ``x^1 .. x^degree``. Emits :class:`ConditionWarning` when the
    condition number of the triangular factor exceeds ``1e12``; the
    diagonal ratio alone cannot get there without tripping the rank check.
    """
    spec = _spec(spec)
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != y.shape[0]:
        raise ShapeError(f"{x.shape[0]} x samples but {y.shape[0]} targets")
    if x.shape[0] < spec.degree + 1:
        raise UnderDetermined(
            f"degree {spec.degree} needs at least {spec.degree + 1} samples, got {x.shape[0]}"
        )
    fit, factors = _from_design(expand(x, spec), y, monomial_names(spec.degree))
    cond = condition_number(factors.r)
    if cond > CONDITION_LIMIT:
        warnings.warn(
            f"polynomial design is ill-conditioned (condition number {cond:.3g})",
            ConditionWarning,
            stacklevel=2,
        )
    return fit


def predict_polynomial(fit: LinearFit, x) -> np.ndarray:
    """Evaluate a fit from :func:`fit_polynomial` at new ``x`` values."""
    degree = len(fit.coefficients)
    return predict(fit, expand(x, degree)[:, 1:])
