"""Conflict-normalized fusion of evidence bodies and ranking of the result.

Every focal-element pair from two sources contributes the product of its
masses: overlapping pairs pool that mass on a merged interval, disjoint
pairs feed the conflict mass, and every surviving mass is rescaled by
K = 1 / (1 - conflict).

The default merge rule is the envelope (union of bounds) of the two
intervals; a set-intersection variant is available through
:class:`MergeSemantics` for comparison.  Note the envelope rule is not
associative in general, so the fusion order of :func:`combine_all` is part
of the contract: a vacuous focal element [0, 1] union-absorbs everything it
meets.

Per-envelope contributions are summed with ``math.fsum``, which is exact
regardless of accumulation order, so results are independent of iteration
order and ``combine_pair`` is bitwise commutative.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import fsum
from typing import Sequence

from .errors import TotalConflictError
from .evidence import (
    BodyOfEvidence,
    FocalElement,
    Interval,
    RatingScale,
    belief,
    plausibility,
)


class MergeSemantics(str, Enum):
    """How an overlapping pair of intervals merges into one focal interval."""

    ENVELOPE = "envelope"
    INTERSECTION = "intersection"


@dataclass(frozen=True, slots=True)
class IntersectionCell:
    """One (row, column) pair of the source-by-source intersection matrix.

    ``envelope`` is the union of bounds of the two intervals and is defined
    only when they overlap.
    """

    product_mass: float
    overlap: bool
    envelope: Interval | None = None


@dataclass(frozen=True, slots=True)
class CombinationStep:
    """Record of one pairwise fusion step, kept for reporting."""

    index: int
    left: str
    right: str
    conflict_mass: float
    agreement_mass: float
    k_constant: float


@dataclass(frozen=True, slots=True)
class CombinationResult:
    """Fused body plus the conflict bookkeeping of the final pairwise step.

    ``conflict_mass`` + ``agreement_mass`` account for all probability of
    that step; ``k_constant`` = 1 / (1 - conflict_mass) >= 1.  ``steps``
    logs every pairwise step of a sequential fusion in order.
    """

    combined: BodyOfEvidence
    conflict_mass: float
    agreement_mass: float
    k_constant: float
    steps: tuple[CombinationStep, ...] = ()


@dataclass(frozen=True, slots=True)
class RankedEstimate:
    """A combined focal element with its Bel/Pl against the combined body."""

    interval: Interval
    mass: float
    belief: float
    plausibility: float
    term: str | None = None


def intersection_matrix(body_a: BodyOfEvidence,
                        body_b: BodyOfEvidence) -> list[list[IntersectionCell]]:
    """Cell (i, j) pairs focal element i of ``body_a`` with j of ``body_b``."""
    matrix: list[list[IntersectionCell]] = []
    for fa in body_a.focal_elements:
        row: list[IntersectionCell] = []
        for fb in body_b.focal_elements:
            product = fa.mass * fb.mass
            if fa.interval.overlaps(fb.interval):
                row.append(IntersectionCell(product, True,
                                            fa.interval.envelope(fb.interval)))
            else:
                row.append(IntersectionCell(product, False))
        matrix.append(row)
    return matrix


def _merge_interval(a: Interval, b: Interval, semantics: MergeSemantics) -> Interval:
    if semantics is MergeSemantics.ENVELOPE:
        return a.envelope(b)
    return a.intersection(b)


def combine_pair(body_a: BodyOfEvidence, body_b: BodyOfEvidence,
                 semantics: MergeSemantics = MergeSemantics.ENVELOPE,
                 ) -> CombinationResult:
    """Fuse two bodies under the configured merge rule.

    Raises :class:`TotalConflictError` when every pair is disjoint (the
    normalization constant would be undefined).
    """
    groups: dict[tuple[float, float], list[float]] = {}
    conflict_terms: list[float] = []
    for fa in body_a.focal_elements:
        for fb in body_b.focal_elements:
            product = fa.mass * fb.mass
            if fa.interval.overlaps(fb.interval):
                merged = _merge_interval(fa.interval, fb.interval, semantics)
                groups.setdefault((merged.lower, merged.upper), []).append(product)
            else:
                conflict_terms.append(product)
    conflict = fsum(conflict_terms)
    agreement = fsum(product for terms in groups.values() for product in terms)
    if not groups or conflict >= 1.0:
        raise TotalConflictError(
            f"sources {body_a.source_name!r} and {body_b.source_name!r} "
            f"are in total conflict",
            left=body_a.source_name, right=body_b.source_name,
        )
    k_constant = 1.0 / (1.0 - conflict)
    elements = tuple(
        FocalElement(Interval(lower, upper), min(fsum(terms) * k_constant, 1.0))
        for (lower, upper), terms in sorted(groups.items())
    )
    combined = BodyOfEvidence(
        f"{body_a.source_name}⊕{body_b.source_name}", elements,
    )
    step = CombinationStep(1, body_a.source_name, body_b.source_name,
                           conflict, agreement, k_constant)
    return CombinationResult(combined, conflict, agreement, k_constant, (step,))


def combine_all(bodies: Sequence[BodyOfEvidence],
                semantics: MergeSemantics = MergeSemantics.ENVELOPE,
                ) -> CombinationResult:
    """Left-to-right sequential fusion: ((b1 + b2) + b3) ...

    The input order is part of the contract (the envelope rule is not
    associative).  The returned result reports the conflict and K of the
    final pairwise step; ``steps`` logs every step.  A single body is
    returned unchanged with conflict 0 and K 1.  A total conflict at any
    step aborts with that step's 1-based index.
    """
    bodies = list(bodies)
    if not bodies:
        raise ValueError("combine_all needs at least one body")
    if len(bodies) == 1:
        return CombinationResult(bodies[0], 0.0, 1.0, 1.0)
    accumulated = bodies[0]
    steps: list[CombinationStep] = []
    result: CombinationResult | None = None
    for index, nxt in enumerate(bodies[1:], start=1):
        try:
            result = combine_pair(accumulated, nxt, semantics)
        except TotalConflictError as exc:
            raise TotalConflictError(
                f"total conflict at fusion step {index} "
                f"({accumulated.source_name!r} with {nxt.source_name!r})",
                step=index, left=accumulated.source_name, right=nxt.source_name,
            ) from None
        steps.append(CombinationStep(index, accumulated.source_name,
                                     nxt.source_name, result.conflict_mass,
                                     result.agreement_mass, result.k_constant))
        accumulated = result.combined
    assert result is not None
    return CombinationResult(accumulated, result.conflict_mass,
                             result.agreement_mass, result.k_constant,
                             tuple(steps))


def rank(result: CombinationResult, scale: RatingScale) -> list[RankedEstimate]:
    """Order combined focal elements by decreasing Bel, then Pl, then lower bound.

    Each element's Bel and Pl are computed against the combined body; the
    scale term whose interval equals the element's interval exactly is
    attached when one exists.
    """
    body = result.combined
    estimates = [
        RankedEstimate(
            element.interval,
            element.mass,
            belief(body, element.interval),
            plausibility(body, element.interval),
            scale.term_for(element.interval),
        )
        for element in body.focal_elements
    ]
    estimates.sort(key=lambda e: (-e.belief, -e.plausibility, e.interval.lower))
    return estimates
