"""Exception types and the validation-violation record shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class InnofuseError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidIntervalError(InnofuseError, ValueError):
    """Interval bounds violate 0 <= lower <= upper <= 1."""


class InvalidScaleError(InnofuseError, ValueError):
    """A rating scale is empty, or a term is blank or duplicated."""


class InvalidAssessmentError(InnofuseError, ValueError):
    """Assessment counts are inconsistent with the expert group size."""


class InvalidBodyError(InnofuseError, ValueError):
    """A body of evidence breaks mass normalization or focal-element rules."""


class TotalConflictError(InnofuseError, ArithmeticError):
    """All pairwise products fell into conflict; the fused mass is undefined.

    ``step`` is the 1-based index of the failing fusion step when raised from
    a sequential combination, and None for a direct pairwise call.
    """

    def __init__(self, message: str, step: int | None = None,
                 left: str | None = None, right: str | None = None):
        super().__init__(message)
        self.step = step
        self.left = left
        self.right = right


class SpanMismatchError(InnofuseError, ValueError):
    """Two time series do not cover the same (positive-length) span."""


class UnmappedValueError(InnofuseError, LookupError):
    """A measurement falls into none of the scale's intervals.

    ``gaps`` lists the uncovered open regions of [0, 1] as (lo, hi) pairs.
    """

    def __init__(self, message: str, value: float, gaps: list[tuple[float, float]]):
        super().__init__(message)
        self.value = value
        self.gaps = gaps


@dataclass(frozen=True, slots=True)
class Violation:
    """One document-validation finding; severity is ``error`` or ``warning``."""

    severity: str
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity.upper()} [{self.field}]: {self.message}"


class DocumentParseError(InnofuseError, ValueError):
    """The document is not syntactically valid JSON."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, position: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.position = position


class DocumentValidationError(InnofuseError, ValueError):
    """The document parsed but breaks the evaluation-document contract."""

    def __init__(self, violations: list[Violation]):
        summary = "; ".join(str(v) for v in violations) or "invalid document"
        super().__init__(summary)
        self.violations = list(violations)
