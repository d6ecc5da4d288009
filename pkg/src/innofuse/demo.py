"""Bundled demonstration fixture: a three-source survey with known results.

Three expert groups (120, 80 and 50 experts) rate one component on a
thirteen-term scale of three main bands, nine nested auxiliary bands and a
zero point.  The expected fusion outcome of this document is precomputed
and shipped alongside it, so the ``demo`` command doubles as a regression
check: fusing A with B, then the result with C, must yield exactly five
focal intervals with the Bel/Pl values in :data:`DEMO_EXPECTED`.
"""

from __future__ import annotations

from .evidence import ExpertGroup, Interval, LinguisticRating, RatingScale
from .survey import SourceData, serialize_source_data

_SCALE_ROWS: tuple[tuple[str, float, float], ...] = (
    ("основная № 1", 0.00, 0.33),
    ("основная № 2", 0.34, 0.66),
    ("основная № 3", 0.67, 1.00),
    ("вспомогательная № 1", 0.00, 0.11),
    ("вспомогательная № 2", 0.12, 0.22),
    ("вспомогательная № 3", 0.23, 0.33),
    ("вспомогательная № 4", 0.34, 0.44),
    ("вспомогательная № 5", 0.45, 0.55),
    ("вспомогательная № 6", 0.56, 0.66),
    ("вспомогательная № 7", 0.67, 0.77),
    ("вспомогательная № 8", 0.78, 0.88),
    ("вспомогательная № 9", 0.89, 1.00),
    ("нулевая оценка", 0.00, 0.00),
)

# Survey rows per group: (term, number of experts who chose it).
GROUP_A_ROWS: tuple[tuple[str, int], ...] = (
    ("основная № 1", 10),
    ("основная № 2", 5),
    ("вспомогательная № 9", 10),
    ("основная № 3", 20),
    ("вспомогательная № 8", 5),
    ("вспомогательная № 3", 15),
    ("вспомогательная № 5", 15),
    ("вспомогательная № 2", 5),
    ("вспомогательная № 7", 15),
    ("вспомогательная № 4", 5),
    ("вспомогательная № 6", 5),
    ("вспомогательная № 1", 5),
    ("нулевая оценка", 5),
)

GROUP_B_ROWS: tuple[tuple[str, int], ...] = (
    ("вспомогательная № 4", 10),
    ("вспомогательная № 8", 5),
    ("основная № 2", 20),
    ("основная № 1", 15),
    ("вспомогательная № 5", 5),
    ("основная № 3", 20),
    ("вспомогательная № 9", 5),
)

GROUP_C_ROWS: tuple[tuple[str, int], ...] = (
    ("вспомогательная № 9", 10),
    ("вспомогательная № 1", 5),
    ("вспомогательная № 7", 5),
    ("вспомогательная № 6", 5),
    ("нулевая оценка", 10),
    ("основная № 2", 5),
    ("основная № 3", 5),
    ("вспомогательная № 8", 5),
)

_GROUPS: tuple[tuple[str, tuple[tuple[str, int], ...]], ...] = (
    ("A", GROUP_A_ROWS),
    ("B", GROUP_B_ROWS),
    ("C", GROUP_C_ROWS),
)

#: Expected fusion outcome of the demo document (regression reference).
DEMO_EXPECTED = {
    "first_step": {"conflict": 0.7215, "conflict_tolerance": 0.003,
                   "k": 3.5906, "k_tolerance": 0.01},
    "intervals": [(0.00, 0.33), (0.34, 0.66), (0.67, 1.00),
                  (0.78, 0.88), (0.89, 1.00)],
    "bel_pl": {
        (0.00, 0.33): (0.1900, 0.1900),
        (0.34, 0.66): (0.1557, 0.1557),
        (0.67, 1.00): (0.6544, 0.6544),
        (0.89, 1.00): (0.0106, 0.6517),
        (0.78, 0.88): (0.0026, 0.6438),
    },
    "bel_pl_tolerance": 0.005,
    "top": {"interval": (0.67, 1.00), "term": "основная № 3"},
}


def demo_scale() -> RatingScale:
    return RatingScale(tuple(
        LinguisticRating(term, Interval(lower, upper))
        for term, lower, upper in _SCALE_ROWS
    ))


def demo_document() -> SourceData:
    """The bundled evaluation document: one component, one indicator,
    groups A (120), B (80) and C (50)."""
    scale = demo_scale()
    results: list[LinguisticRating] = []
    groups: list[ExpertGroup] = []
    for name, rows in _GROUPS:
        groups.append(ExpertGroup(name, sum(count for _, count in rows)))
        for term, count in rows:
            rating = scale.find(term)
            assert rating is not None
            results.extend([rating] * count)
    return SourceData(
        component_names=("Техническое решение",),
        indicator_names=("Инновационность",),
        expert_groups=tuple(groups),
        estimate_scale=scale,
        interview_results=tuple(results),
        round_digits=2,
    )


def demo_document_json() -> str:
    return serialize_source_data(demo_document())
