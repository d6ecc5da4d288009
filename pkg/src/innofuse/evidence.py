"""Interval evidence on the unit frame: domain types, mass assignment, Bel/Pl.

A source (expert group, search agent, measuring device) distributes unit
mass over closed subintervals of [0, 1].  Belief and plausibility of a query
interval are the total masses of the focal elements it contains respectively
overlaps; both use closed-interval semantics, so touching endpoints count.

All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable, Sequence

from .errors import (
    InvalidAssessmentError,
    InvalidBodyError,
    InvalidIntervalError,
    InvalidScaleError,
)

#: Largest tolerated deviation of a body's total mass from 1.
MASS_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed numeric subinterval of [0, 1].

    Degenerate point intervals (lower == upper) are permitted.
    """

    lower: float
    upper: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper <= 1.0):
            raise InvalidIntervalError(
                f"interval bounds must satisfy 0 <= lower <= upper <= 1, "
                f"got [{self.lower}, {self.upper}]"
            )

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    def contains_interval(self, other: Interval) -> bool:
        """Closed containment: every point of ``other`` lies in this interval."""
        return self.lower <= other.lower and other.upper <= self.upper

    def overlaps(self, other: Interval) -> bool:
        """Closed overlap test; touching endpoints count as overlapping."""
        return max(self.lower, other.lower) <= min(self.upper, other.upper)

    def envelope(self, other: Interval) -> Interval:
        """Union of bounds: the tightest interval covering both operands."""
        return Interval(min(self.lower, other.lower), max(self.upper, other.upper))

    def intersection(self, other: Interval) -> Interval:
        """Common part of two overlapping intervals."""
        if not self.overlaps(other):
            raise InvalidIntervalError(
                f"intervals [{self.lower}, {self.upper}] and "
                f"[{other.lower}, {other.upper}] do not overlap"
            )
        return Interval(max(self.lower, other.lower), min(self.upper, other.upper))

    def __str__(self) -> str:
        return f"[{self.lower:g}, {self.upper:g}]"


#: The whole frame; carries the mass of total ignorance (vacuous evidence).
FULL_FRAME = Interval(0.0, 1.0)


@dataclass(frozen=True, slots=True)
class LinguisticRating:
    """A scale entry: human-readable term bound to a numeric interval."""

    term: str
    interval: Interval

    def __post_init__(self):
        if not self.term:
            raise InvalidScaleError("rating term must be non-empty")


@dataclass(frozen=True, slots=True)
class RatingScale:
    """Ordered list of linguistic ratings.

    Intervals may overlap and may be nested (auxiliary ratings inside main
    ones); terms must be unique.
    """

    ratings: tuple[LinguisticRating, ...]

    def __post_init__(self):
        object.__setattr__(self, "ratings", tuple(self.ratings))
        if not self.ratings:
            raise InvalidScaleError("a scale needs at least one rating")
        seen: set[str] = set()
        for rating in self.ratings:
            if rating.term in seen:
                raise InvalidScaleError(f"duplicate scale term {rating.term!r}")
            seen.add(rating.term)

    def find(self, term: str) -> LinguisticRating | None:
        for rating in self.ratings:
            if rating.term == term:
                return rating
        return None

    def term_for(self, interval: Interval) -> str | None:
        """Term of the first rating whose interval equals ``interval`` exactly."""
        for rating in self.ratings:
            if rating.interval == interval:
                return rating.term
        return None


@dataclass(frozen=True, slots=True)
class ExpertGroup:
    """A named source with a fixed number of experts (or agents, or probes)."""

    name: str
    expert_count: int

    def __post_init__(self):
        if self.expert_count < 1:
            raise InvalidAssessmentError(
                f"group {self.name!r} must have at least one expert"
            )


@dataclass(frozen=True, slots=True)
class Assessment:
    """One rating together with the number of experts who gave it."""

    rating: LinguisticRating
    voter_count: int

    def __post_init__(self):
        if self.voter_count < 1:
            raise InvalidAssessmentError("an assessment needs at least one voter")


@dataclass(frozen=True, slots=True)
class FocalElement:
    """An interval carrying positive basic probability mass."""

    interval: Interval
    mass: float

    def __post_init__(self):
        if not 0.0 < self.mass <= 1.0:
            raise InvalidBodyError(f"focal mass must be in (0, 1], got {self.mass}")


@dataclass(frozen=True, slots=True)
class BodyOfEvidence:
    """One source's focal elements; masses sum to 1 within MASS_TOLERANCE.

    Identical intervals are merged before construction, so no two focal
    elements share bounds.  Mass on the empty set is represented by absence.
    """

    source_name: str
    focal_elements: tuple[FocalElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "focal_elements", tuple(self.focal_elements))
        if not self.focal_elements:
            raise InvalidBodyError(
                f"body {self.source_name!r} needs at least one focal element"
            )
        seen: set[tuple[float, float]] = set()
        for element in self.focal_elements:
            key = (element.interval.lower, element.interval.upper)
            if key in seen:
                raise InvalidBodyError(
                    f"body {self.source_name!r} repeats interval {element.interval}"
                )
            seen.add(key)
        total = fsum(element.mass for element in self.focal_elements)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise InvalidBodyError(
                f"body {self.source_name!r} masses sum to {total!r}, expected 1"
            )

    def sorted_elements(self) -> tuple[FocalElement, ...]:
        """Focal elements ordered by (lower, upper) bound."""
        return tuple(sorted(
            self.focal_elements,
            key=lambda f: (f.interval.lower, f.interval.upper),
        ))


def mass_of(voter_count: int, group_size: int) -> float:
    """Basic probability of one assessment: voter_count / group_size.

    Full floating precision; any rounding is a display concern.
    """
    if group_size < 1:
        raise InvalidAssessmentError("group size must be positive")
    if voter_count < 1:
        raise InvalidAssessmentError("voter count must be positive")
    if voter_count > group_size:
        raise InvalidAssessmentError(
            f"{voter_count} voters exceed the group size of {group_size}"
        )
    return voter_count / group_size


def build_evidence_table(assessments: Sequence[Assessment],
                         group: ExpertGroup) -> BodyOfEvidence:
    """Turn one group's assessments into a normalized body of evidence.

    Assessments sharing an identical interval merge into a single focal
    element with voter counts summed (first-seen order is preserved).  Each
    element's mass is merged_count / group.expert_count.  Experts who gave
    no assessment contribute their mass to the full frame [0, 1] as vacuous
    evidence rather than being renormalized away.
    """
    total_votes = sum(a.voter_count for a in assessments)
    if total_votes > group.expert_count:
        raise InvalidAssessmentError(
            f"group {group.name!r}: {total_votes} votes exceed "
            f"{group.expert_count} experts"
        )
    merged: dict[Interval, int] = {}
    for assessment in assessments:
        interval = assessment.rating.interval
        merged[interval] = merged.get(interval, 0) + assessment.voter_count
    residual = group.expert_count - total_votes
    if residual:
        merged[FULL_FRAME] = merged.get(FULL_FRAME, 0) + residual
    elements = tuple(
        FocalElement(interval, mass_of(count, group.expert_count))
        for interval, count in merged.items()
    )
    return BodyOfEvidence(group.name, elements)


def belief(body: BodyOfEvidence, query: Interval) -> float:
    """Lower probability bound: total mass of focal elements inside ``query``."""
    return fsum(
        element.mass for element in body.focal_elements
        if query.contains_interval(element.interval)
    )


def plausibility(body: BodyOfEvidence, query: Interval) -> float:
    """Upper probability bound: total mass of focal elements overlapping ``query``."""
    return fsum(
        element.mass for element in body.focal_elements
        if element.interval.overlaps(query)
    )


def expectation_bounds(body: BodyOfEvidence) -> tuple[float, float]:
    """Mass-weighted means of the lower and upper interval bounds."""
    lower = fsum(e.mass * e.interval.lower for e in body.focal_elements)
    upper = fsum(e.mass * e.interval.upper for e in body.focal_elements)
    return lower, upper


def discount(body: BodyOfEvidence, reliability: float) -> BodyOfEvidence:
    """Weaken a source by reliability in [0, 1].

    Masses scale by ``reliability``; the deficit moves to the full frame.
    A reliability of 1 returns the body unchanged, 0 yields vacuous evidence.
    """
    if not 0.0 <= reliability <= 1.0:
        raise ValueError(f"reliability must lie in [0, 1], got {reliability}")
    if reliability == 1.0:
        return body
    frame_mass = 1.0 - reliability
    elements: list[FocalElement] = []
    for element in body.focal_elements:
        scaled = element.mass * reliability
        if element.interval == FULL_FRAME:
            frame_mass += scaled
        elif scaled > 0.0:
            elements.append(FocalElement(element.interval, scaled))
    elements.append(FocalElement(FULL_FRAME, min(frame_mass, 1.0)))
    return BodyOfEvidence(body.source_name, tuple(elements))


def merge_assessments(assessments: Iterable[Assessment]) -> list[Assessment]:
    """Merge assessments that repeat the same (term, interval) pair.

    Voter counts are summed; first-seen order is preserved.
    """
    merged: dict[tuple[str, float, float], Assessment] = {}
    for assessment in assessments:
        rating = assessment.rating
        key = (rating.term, rating.interval.lower, rating.interval.upper)
        if key in merged:
            merged[key] = Assessment(
                merged[key].rating,
                merged[key].voter_count + assessment.voter_count,
            )
        else:
            merged[key] = assessment
    return list(merged.values())
