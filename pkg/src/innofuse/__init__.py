"""Interval-evidence fusion and innovativeness indicators.

The package fuses interval-valued assessments from multiple sources under
a conflict-normalized combination rule with envelope (union-of-bounds)
merge semantics, computes belief/plausibility over a linguistic rating
scale, and derives novelty, relevance and implementability indicators from
search-observation series.  A CLI and a stateless HTTP service expose the
same pipeline.
"""

__version__ = "0.1.0"

from .errors import (
    DocumentParseError,
    DocumentValidationError,
    InnofuseError,
    InvalidAssessmentError,
    InvalidBodyError,
    InvalidIntervalError,
    InvalidScaleError,
    SpanMismatchError,
    TotalConflictError,
    UnmappedValueError,
    Violation,
)
from .evidence import (
    FULL_FRAME,
    Assessment,
    BodyOfEvidence,
    ExpertGroup,
    FocalElement,
    Interval,
    LinguisticRating,
    RatingScale,
    belief,
    build_evidence_table,
    discount,
    expectation_bounds,
    mass_of,
    merge_assessments,
    plausibility,
)
from .combination import (
    CombinationResult,
    CombinationStep,
    IntersectionCell,
    MergeSemantics,
    RankedEstimate,
    combine_all,
    combine_pair,
    intersection_matrix,
    rank,
)
from .indicators import (
    NormalizationMode,
    ObservationSet,
    TimeSeries,
    implementability,
    local_maxima,
    mean_peak_gap_ratio,
    normalize,
    novelty,
    relevance,
)
from .survey import (
    DiagramRow,
    ObservationRecord,
    SourceData,
    assessments_by_group,
    diagram_csv,
    diagram_data,
    diagram_row_dicts,
    expected_interview_count,
    group_snapshots,
    map_measurement_to_rating,
    parse_observations,
    parse_source_data,
    scale_gaps,
    serialize_source_data,
    source_data_to_dict,
    validate_document,
)
from .report import (
    build_indicator_report,
    build_run_report,
    render_indicator_table,
    render_report_csv,
    render_report_table,
    report_failures,
    report_to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
