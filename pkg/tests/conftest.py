import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))

HOUSE_SIZES = np.array([1000.0, 1200.0, 1500.0, 1800.0, 2000.0])
HOUSE_BEDROOMS = np.array([2.0, 3.0, 3.0, 4.0, 4.0])
HOUSE_PRICES = np.array([150000.0, 180000.0, 210000.0, 240000.0, 270000.0])

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def house():
    return HOUSE_SIZES.copy(), HOUSE_PRICES.copy()


@pytest.fixture
def house_multi():
    return np.column_stack([HOUSE_SIZES, HOUSE_BEDROOMS]), HOUSE_PRICES.copy()


@pytest.fixture(scope="session")
def oracle_values():
    raw = json.loads((TESTS / "golden" / "oracle_values.json").read_text())
    return {k: [Fraction(v) for v in vals] for k, vals in raw.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
