"""Exception and warning types shared across the toolkit."""
from __future__ import annotations


class RegressError(Exception):
    """Base class for every error raised by :mod:`regress`."""


class ShapeError(RegressError, ValueError):
    pass


class NonFiniteError(RegressError, ValueError):
    pass


class RankDeficient(RegressError):
    def __init__(self, rank: int, cols: int, message: str | None = None):
        self.rank = rank
        self.cols = cols
        super().__init__(message or f"design has estimated rank {rank} < {cols} columns")


class UnderDetermined(RegressError):
    pass


class DegenerateTarget(RegressError):
    pass


class DegreeTooLarge(RegressError, ValueError):
    pass


class EvalDomain(RegressError, ArithmeticError):
    """Model evaluated outside the region where it is representable."""


class InvalidFrac(RegressError, ValueError):
    pass


class InvalidConfig(RegressError, ValueError):
    pass


class CsvError(RegressError):
    pass


class EmptyFile(CsvError):
    def __init__(self):
        super().__init__("input is empty (no header row)")


class RaggedRow(CsvError):
    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__(f"row {row}: expected {expected} fields, got {got}")


class CsvSyntax(CsvError):
    def __init__(self, row: int, col: int, reason: str, detail: str = ""):
        self.row = row
        self.col = col
        self.reason = reason
        super().__init__(f"row {row}, column {col}: {reason}" + (f" ({detail})" if detail else ""))


class UnknownColumn(RegressError, KeyError):
    def __init__(self, name: str, available):
        self.name = name
        super().__init__(f"no column named {name!r}; available: {', '.join(available)}")

    def __str__(self):
        return self.args[0]


class IoError(RegressError, OSError):
    pass


class ConditionWarning(UserWarning):
    """The least-squares design is badly conditioned; coefficients may be inaccurate."""
