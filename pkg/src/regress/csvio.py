"""Numeric CSV ingestion and TSV plot-data emission.

The CSV dialect is deliberately small: UTF-8, comma separated, a header row,
decimal numbers only, no quoting. Floats are always written in their
shortest round-trip form (``repr``), so reading back what was written is
lossless.
"""
from __future__ import annotations

from dataclasses import dataclass
from os import PathLike
from pathlib import Path
from typing import Mapping, Sequence, Union

import numpy as np

from .core import _frozen, as_vector
from .errors import CsvSyntax, EmptyFile, IoError, RaggedRow, ShapeError, UnknownColumn

PathType = Union[str, PathLike]


@dataclass(frozen=True, eq=False)
class Dataset:
    column_names: tuple[str, ...]
    columns: Mapping[str, np.ndarray]
    n_rows: int

    def column(self, name: str) -> np.ndarray:
        try:
            return self.columns[name]
        except KeyError:
            raise UnknownColumn(name, self.column_names) from None

    def matrix(self, names: Sequence[str]) -> np.ndarray:
        """Stack the named columns side by side into an ``(n_rows, len(names))`` array."""
        return np.column_stack([self.column(n) for n in names]) if names else np.empty((self.n_rows, 0))

    @classmethod
    def from_columns(cls, columns: Mapping[str, Sequence[float]]) -> "Dataset":
        names = tuple(columns)
        if len(set(names)) != len(names) or any(not n for n in names):
            raise ValueError("column names must be unique and non-empty")
        data = {n: as_vector(columns[n]) for n in names}
        lengths = {len(v) for v in data.values()}
        if len(lengths) > 1:
            raise ShapeError("all columns must have the same length")
        return cls(names, data, lengths.pop() if lengths else 0)


def format_float(value: float) -> str:
    return repr(float(value))


def parse_csv(data: Union[bytes, str]) -> Dataset:
    """Parse numeric CSV text into a :class:`Dataset`.

    Row and column numbers in errors are 1-based and count the header as
    row 1. Trailing blank lines are ignored.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise CsvSyntax(1, 1, "invalid encoding", f"not UTF-8 at byte {exc.start}") from None
    else:
        text = data.lstrip("\ufeff")
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EmptyFile()

    for row, line in enumerate(lines, start=1):
        if '"' in line:
            raise CsvSyntax(row, line[: line.find('"')].count(",") + 1, "quoting not supported")

    header = [h.strip() for h in lines[0].split(",")]
    seen = set()
    for col, name in enumerate(header, start=1):
        if not name:
            raise CsvSyntax(1, col, "empty column name")
        if name in seen:
            raise CsvSyntax(1, col, "duplicate column name", name)
        seen.add(name)

    values = np.empty((len(lines) - 1, len(header)))
    for row, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(header):
            raise RaggedRow(row, len(header), len(cells))
        for col, cell in enumerate(cells, start=1):
            try:
                v = float(cell.strip())
            except ValueError:
                raise CsvSyntax(row, col, "non-numeric", repr(cell.strip())) from None
            if not np.isfinite(v):
                raise CsvSyntax(row, col, "non-finite", cell.strip())
            values[row - 2, col - 1] = v

    columns = {name: _frozen(values[:, j].copy()) for j, name in enumerate(header)}
    return Dataset(tuple(header), columns, values.shape[0])


def read_csv(path: PathType) -> Dataset:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_csv(data)


def format_csv(dataset: Dataset) -> str:
    lines = [",".join(dataset.column_names)]
    cols = [dataset.columns[n] for n in dataset.column_names]
    for i in range(dataset.n_rows):
        lines.append(",".join(format_float(c[i]) for c in cols))
    return "\n".join(lines) + "\n"


def _write_text(path: PathType, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def write_csv(dataset: Dataset, path: PathType) -> None:
    _write_text(path, format_csv(dataset))


def format_plot_data(x, y_actual, y_predicted) -> str:
    x = as_vector(x)
    y_actual = as_vector(y_actual)
    y_predicted = as_vector(y_predicted)
    if not (x.shape == y_actual.shape == y_predicted.shape):
        raise ShapeError("x, y_actual and y_predicted must have equal lengths")
    order = np.argsort(x, kind="stable")
    rows = ["x\ty_actual\ty_predicted"]
    for i in order:
        rows.append("\t".join(format_float(v) for v in (x[i], y_actual[i], y_predicted[i])))
    return "\n".join(rows) + "\n"


def emit_plot_data(x, y_actual, y_predicted, path: PathType) -> Path:
    """Write a tab-separated ``x / y_actual / y_predicted`` table sorted by ``x``."""
    _write_text(path, format_plot_data(x, y_actual, y_predicted))
    return Path(path)
