"""Regression toolkit: least squares, polynomial, nonlinear and LOWESS fits."""
from .core import QrFactors, as_matrix, as_vector, estimate_rank, qr_decompose, solve_least_squares
from .csvio import Dataset, emit_plot_data, parse_csv, read_csv
from .datasets import load_house_prices
from .errors import (
    ConditionWarning,
    CsvSyntax,
    DegenerateTarget,
    DegreeTooLarge,
    EmptyFile,
    EvalDomain,
    InvalidFrac,
    RaggedRow,
    RankDeficient,
    RegressError,
    ShapeError,
    UnderDetermined,
)
from .linear import FitReport, LinearFit, diagnostics, fit_multiple, fit_simple, predict
from .lowess import LowessConfig, LowessResult, bisquare, smooth, tricube
from .nonlinear import (
    AFFINE,
    EXPONENTIAL,
    ExponentialParams,
    LMConfig,
    LMResult,
    LMStatus,
    ParameterizedModel,
    eval_exponential,
    fit_exponential,
    levenberg_marquardt,
    numerical_jacobian,
)
from .polynomial import PolynomialSpec, expand, fit_polynomial, predict_polynomial

__version__ = "0.1.0"
