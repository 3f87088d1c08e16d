"""The house-price tables used throughout the demos and tests."""
from __future__ import annotations

from importlib import resources

from ..csvio import Dataset, parse_csv

NAMES = ("house_simple", "house_multi", "house_lowess")


def csv_path(name: str):
    if name not in NAMES:
        raise ValueError(f"unknown dataset {name!r}; choose from {', '.join(NAMES)}")
    return resources.files(__name__) / f"{name}.csv"


def load_house_prices(name: str = "house_simple") -> Dataset:
    """Five houses: ``size`` (sq ft), ``price`` ($) and, for ``house_multi``, ``bedrooms``."""
    return parse_csv(csv_path(name).read_bytes())
