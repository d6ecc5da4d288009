"""Innovativeness indicators computed from search-observation series.

Novelty is the complement of the mean normalized hit count over a batch of
queries (rare objects score high); relevance is the mean normalized access
frequency (sought-after objects score high); implementability rewards short
recovery periods, measured by the spacing of local maxima of the novelty
and relevance time series.

Normalization variants:

* ``linear`` -- (v - min) / (max - min); preferable when values fill their
  range evenly.  A degenerate spread (max == min) maps everything to 0.
* ``statistical`` -- (v - mean) / stddev, clamped to [0, 1]; for data with
  rare outliers far beyond the typical spread.
* ``exponential`` -- 1 - exp(1 - v / min), clamped; for unbounded maxima.
  A minimum of 0 is guarded by substituting 1 for the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import exp, fsum
from statistics import pstdev

from .errors import SpanMismatchError


class NormalizationMode(str, Enum):
    LINEAR = "linear"
    STATISTICAL = "statistical"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True, slots=True)
class ObservationSet:
    """Non-negative measurements (hit counts or access frequencies), one per
    executed query, with optional parallel query labels."""

    values: tuple[float, ...]
    query_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.query_labels is not None:
            object.__setattr__(self, "query_labels", tuple(self.query_labels))
        if not self.values:
            raise ValueError("an observation set needs at least one value")
        if any(v < 0 for v in self.values):
            raise ValueError("observation values must be non-negative")
        if self.query_labels is not None and len(self.query_labels) != len(self.values):
            raise ValueError("query labels must parallel the values")


@dataclass(frozen=True, slots=True)
class TimeSeries:
    """Strictly increasing time grid carrying unit-fraction values."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "points",
            tuple((float(t), float(v)) for t, v in self.points),
        )
        if not self.points:
            raise ValueError("a time series needs at least one point")
        times = [t for t, _ in self.points]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("times must be strictly increasing")
        if any(not 0.0 <= v <= 1.0 for _, v in self.points):
            raise ValueError("series values must lie in [0, 1]")

    @property
    def span(self) -> tuple[float, float]:
        return self.points[0][0], self.points[-1][0]


def _clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def normalize(values: ObservationSet,
              mode: NormalizationMode = NormalizationMode.LINEAR) -> list[float]:
    """Map raw measurements onto [0, 1] per the selected variant.

    All outputs are clamped to [0, 1].  The statistical variant divides by
    the population standard deviation (z-scores need the numerator's units);
    a zero deviation maps everything to 0, like a degenerate linear spread.
    """
    vs = values.values
    if mode is NormalizationMode.LINEAR:
        lo, hi = min(vs), max(vs)
        if hi == lo:
            return [0.0] * len(vs)
        return [_clamp01((v - lo) / (hi - lo)) for v in vs]
    if mode is NormalizationMode.STATISTICAL:
        mean = fsum(vs) / len(vs)
        sigma = pstdev(vs)
        if sigma == 0.0:
            return [0.0] * len(vs)
        return [_clamp01((v - mean) / sigma) for v in vs]
    if mode is NormalizationMode.EXPONENTIAL:
        lo = min(vs)
        if lo == 0.0:
            lo = 1.0
        return [_clamp01(1.0 - exp(1.0 - v / lo)) for v in vs]
    raise ValueError(f"unknown normalization mode {mode!r}")


def novelty(hits: ObservationSet,
            mode: NormalizationMode = NormalizationMode.LINEAR) -> float:
    """1 minus the mean normalized hit count: rarer objects score higher."""
    normalized = normalize(hits, mode)
    return _clamp01(1.0 - fsum(normalized) / len(normalized))


def relevance(frequencies: ObservationSet,
              mode: NormalizationMode = NormalizationMode.LINEAR) -> float:
    """Mean normalized access frequency (no complement, unlike novelty)."""
    normalized = normalize(frequencies, mode)
    return _clamp01(fsum(normalized) / len(normalized))


def local_maxima(series: TimeSeries) -> list[float]:
    """Times of local maxima; a plateau reports its first point only.

    A run of equal values qualifies when every existing neighbor run is
    strictly lower; endpoints qualify against their single neighbor.  A
    constant series (including a single point) has no strictly lower side
    and therefore no maxima.
    """
    points = series.points
    runs: list[tuple[int, float]] = []
    for index, (_, value) in enumerate(points):
        if not runs or value != runs[-1][1]:
            runs.append((index, value))
    maxima: list[float] = []
    for position, (start, value) in enumerate(runs):
        left = runs[position - 1][1] if position > 0 else None
        right = runs[position + 1][1] if position + 1 < len(runs) else None
        if left is None and right is None:
            continue
        if (left is None or value > left) and (right is None or value > right):
            maxima.append(points[start][0])
    return maxima


def mean_peak_gap_ratio(maxima_times: list[float], t_start: float,
                        t_end: float) -> float:
    """Mean spacing of consecutive maxima as a fraction of the series span.

    Fewer than two maxima means no recovery was observed: worst case, 1.
    """
    if len(maxima_times) < 2:
        return 1.0
    gaps = [b - a for a, b in zip(maxima_times, maxima_times[1:])]
    return _clamp01((fsum(gaps) / len(gaps)) / (t_end - t_start))


def implementability(nov_series: TimeSeries, rel_series: TimeSeries) -> float:
    """1 - mean of the two series' peak-gap ratios: fast recovery scores high.

    Both series must cover the same positive-length span.
    """
    nov_span, rel_span = nov_series.span, rel_series.span
    if nov_span != rel_span:
        raise SpanMismatchError(
            f"series spans differ: {nov_span} versus {rel_span}"
        )
    t_start, t_end = nov_span
    if t_end <= t_start:
        raise SpanMismatchError("series span must have positive length")
    gap_nov = mean_peak_gap_ratio(local_maxima(nov_series), t_start, t_end)
    gap_rel = mean_peak_gap_ratio(local_maxima(rel_series), t_start, t_end)
    return _clamp01(1.0 - 0.5 * (gap_nov + gap_rel))
