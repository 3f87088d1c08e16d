"""``regress`` command-line tool: fit, predict and smooth numeric CSV data.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable input, bad
CSV, missing columns, too few rows), 3 numerical failure (rank-deficient
design, singular or non-converged nonlinear fit, model domain violation).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import csvio
from .errors import (
    CsvError,
    DegenerateTarget,
    EvalDomain,
    InvalidFrac,
    IoError,
    RankDeficient,
    RegressError,
    ShapeError,
    UnderDetermined,
    UnknownColumn,
)
from .linear import LinearFit, diagnostics, fit_multiple
from .lowess import LowessConfig, smooth
from .nonlinear import EXPONENTIAL, ExponentialParams, LMStatus, eval_exponential, fit_exponential
from .polynomial import MAX_DEGREE, fit_polynomial, predict_polynomial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

MODELS = ("linear", "poly", "nls-exponential")


class UsageError(Exception):
    pass


class FitFileError(RegressError):
    """A fit JSON handed to ``predict`` is unreadable or malformed."""


class NumericalFailure(RegressError):
    pass


@dataclass
class CliRequest:
    command: str
    model: Optional[str] = None
    input_path: Optional[str] = None
    target: Optional[str] = None
    features: list[str] = field(default_factory=list)
    degree: Optional[int] = None
    frac: Optional[float] = None
    robust_iters: Optional[int] = None
    p0: Optional[list[float]] = None
    output_path: Optional[str] = None
    plot_path: Optional[str] = None
    fit_path: Optional[str] = None


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    if isinstance(exc, (CsvError, UnknownColumn, IoError, OSError, UnderDetermined, FitFileError, ShapeError)):
        return EXIT_DATA
    if isinstance(exc, (RankDeficient, DegenerateTarget, EvalDomain, NumericalFailure, RegressError)):
        return EXIT_NUMERIC
    raise exc


def validate(req: CliRequest) -> None:
    if req.command == "fit":
        if req.model not in MODELS:
            raise UsageError(f"--model must be one of {', '.join(MODELS)}")
        if req.input_path is None or req.target is None or not req.features:
            raise UsageError("fit requires --input, --target and --features")
        if req.model == "poly":
            if req.degree is None:
                raise UsageError("--degree is required for --model poly")
            if not 0 <= req.degree <= MAX_DEGREE:
                raise UsageError(f"--degree must lie in 0..{MAX_DEGREE}")
        elif req.degree is not None:
            raise UsageError("--degree only applies to --model poly")
        if req.model in ("poly", "nls-exponential") and len(req.features) != 1:
            raise UsageError(f"--model {req.model} takes exactly one feature column")
        if req.p0 is not None:
            if req.model != "nls-exponential":
                raise UsageError("--p0 only applies to --model nls-exponential")
            if len(req.p0) != 3:
                raise UsageError("--p0 takes three values: a,b,c")
    elif req.command == "predict":
        if req.fit_path is None or req.input_path is None:
            raise UsageError("predict requires --fit and --input")
    elif req.command == "smooth":
        if req.input_path is None or req.target is None or len(req.features) != 1:
            raise UsageError("smooth requires --input, --x and --y")
        if req.frac is not None and not (0.0 < req.frac <= 1.0):
            raise UsageError("--frac must lie in (0, 1]")
        if req.robust_iters is not None and req.robust_iters < 0:
            raise UsageError("--iters must be non-negative")
    else:
        raise UsageError(f"unknown command {req.command!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        csvio._write_text(path, text)


def _fit(req: CliRequest) -> int:
    data = csvio.read_csv(req.input_path)
    y = data.column(req.target)
    x = data.matrix(req.features)
    status = EXIT_OK

    if req.model == "linear":
        fit = fit_multiple(x, y, req.features)
        result = _linear_json(req, fit, y)
        fitted = y - fit.residuals
    elif req.model == "poly":
        fit = fit_polynomial(x[:, 0], y, req.degree)
        result = _linear_json(req, fit, y, degree=req.degree)
        fitted = y - fit.residuals
    else:
        lm = fit_exponential(x[:, 0], y, req.p0)
        params = ExponentialParams(*lm.params)
        fitted = np.asarray(eval_exponential(params, x[:, 0]), dtype=float).reshape(-1)
        dev = y - y.mean()
        ss_tot = float(dev @ dev)
        result = {
            "model": req.model,
            "target": req.target,
            "features": list(req.features),
            "params": {name: float(v) for name, v in zip(EXPONENTIAL.param_names, lm.params)},
            "sse": lm.final_sse,
            "iterations": lm.iterations,
            "status": lm.status.value,
            "r2": 1.0 - lm.final_sse / ss_tot if ss_tot > 0 else None,
            "mse": lm.final_sse / len(y),
            "n_samples": int(data.n_rows),
        }
        if lm.status is not LMStatus.CONVERGED:
            print(f"regress: nonlinear fit did not converge ({lm.status.value})", file=sys.stderr)
            status = EXIT_NUMERIC

    _emit(_dumps(result), req.output_path)
    if req.plot_path is not None:
        csvio.emit_plot_data(x[:, 0], y, fitted, req.plot_path)
    return status


def _linear_json(req: CliRequest, fit, y, degree: Optional[int] = None) -> dict:
    report = diagnostics(fit, y)
    out = {"model": req.model, "target": req.target, "features": list(req.features)}
    if degree is not None:
        out["degree"] = degree
    out.update(
        intercept=fit.intercept,
        coefficients=fit.coefficient_map,
        r2=report.r_squared,
        mse=report.mse,
        n_samples=fit.n_samples,
    )
    return out


def _load_fit(path: str) -> dict:
    try:
        spec = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except (ValueError, UnicodeDecodeError) as exc:
        raise FitFileError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(spec, dict) or spec.get("model") not in MODELS or "features" not in spec:
        raise FitFileError(f"{path} is not a regress fit result")
    return spec


def _predict(req: CliRequest) -> int:
    spec = _load_fit(req.fit_path)
    data = csvio.read_csv(req.input_path)
    x = data.matrix(spec["features"])
    try:
        if spec["model"] == "linear":
            coef = np.array([spec["coefficients"][n] for n in spec["features"]], dtype=float)
            y_pred = spec["intercept"] + x @ coef
        elif spec["model"] == "poly":
            names = [f"x^{p}" for p in range(1, spec["degree"] + 1)]
            coef = np.array([spec["coefficients"][n] for n in names], dtype=float)
            fit = LinearFit(spec["intercept"], coef, tuple(names), np.zeros(0), 0)
            y_pred = predict_polynomial(fit, x[:, 0])
        else:
            p = spec["params"]
            y_pred = eval_exponential(ExponentialParams(p["a"], p["b"], p["c"]), x[:, 0])
    except (KeyError, TypeError) as exc:
        raise FitFileError(f"{req.fit_path} is missing field {exc}") from None
    if "y_pred" in data.column_names:
        raise FitFileError("input already has a y_pred column")
    columns = dict(data.columns)
    columns["y_pred"] = np.asarray(y_pred, dtype=float).reshape(-1)
    _emit(csvio.format_csv(csvio.Dataset.from_columns(columns)), req.output_path)
    return EXIT_OK


def _smooth(req: CliRequest) -> int:
    data = csvio.read_csv(req.input_path)
    x = data.column(req.features[0])
    y = data.column(req.target)
    defaults = LowessConfig()
    cfg = LowessConfig(
        frac=defaults.frac if req.frac is None else req.frac,
        robust_iters=defaults.robust_iters if req.robust_iters is None else req.robust_iters,
    )
    result = smooth(x, y, cfg)
    out = {"model": "lowess", "frac": cfg.frac, "robust_iters": cfg.robust_iters, "n_samples": int(data.n_rows)}
    _emit(_dumps(out), req.output_path)
    if req.plot_path is not None:
        csvio.emit_plot_data(x, y, result.original_order_smoothed, req.plot_path)
    return EXIT_OK


def run(req: CliRequest) -> int:
    """Execute a validated request; returns the process exit code."""
    try:
        validate(req)
        handler = {"fit": _fit, "predict": _predict, "smooth": _smooth}[req.command]
        return handler(req)
    except InvalidFrac as exc:
        print(f"regress: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, RegressError, OSError) as exc:
        print(f"regress: {exc}", file=sys.stderr)
        return exit_code_for(exc)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _names(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


SMOOTH_EPILOG = """\
Each local window holds k = max(3, ceil(frac * n)) samples, clamped to n.
The floor of 3 differs from implementations that use floor(frac * n): with
only two points the far neighbour gets zero tricube weight and the local
line is undetermined.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="regress", description="Regression fitting and smoothing for numeric CSV files.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fit = sub.add_parser("fit", help="fit a model and write its coefficients as JSON")
    fit.add_argument("--model", required=True, choices=MODELS)
    fit.add_argument("--input", required=True, dest="input_path", metavar="FILE")
    fit.add_argument("--target", required=True, metavar="COL")
    fit.add_argument("--features", required=True, type=_names, metavar="COL[,COL...]")
    fit.add_argument("--degree", type=int, metavar="N", help="polynomial degree (poly only)")
    fit.add_argument("--p0", type=_floats, metavar="a,b,c", help="starting parameters (nls-exponential only)")
    fit.add_argument("--out", dest="output_path", metavar="FILE")
    fit.add_argument("--plot", dest="plot_path", metavar="FILE", help="TSV of x, actual and fitted values")

    pred = sub.add_parser("predict", help="apply a saved fit to a CSV, appending a y_pred column")
    pred.add_argument("--fit", required=True, dest="fit_path", metavar="FILE")
    pred.add_argument("--input", required=True, dest="input_path", metavar="FILE")
    pred.add_argument("--out", dest="output_path", metavar="FILE")

    sm = sub.add_parser(
        "smooth",
        help="LOWESS-smooth one column against another",
        epilog=SMOOTH_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sm.add_argument("--input", required=True, dest="input_path", metavar="FILE")
    sm.add_argument("--x", required=True, metavar="COL")
    sm.add_argument("--y", required=True, metavar="COL")
    sm.add_argument("--frac", type=float, metavar="F", help="window fraction in (0, 1] (default 2/3)")
    sm.add_argument("--iters", type=int, dest="robust_iters", metavar="N", help="robustness passes (default 3)")
    sm.add_argument("--out", dest="output_path", metavar="FILE")
    sm.add_argument("--plot", dest="plot_path", metavar="FILE")
    return parser


def parse_request(argv: Sequence[str]) -> CliRequest:
    ns = vars(build_parser().parse_args(argv))
    if ns["command"] == "smooth":
        ns["features"] = [ns.pop("x")]
        ns["target"] = ns.pop("y")
    return CliRequest(**ns)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        req = parse_request(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"regress: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
