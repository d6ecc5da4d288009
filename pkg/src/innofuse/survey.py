"""Evaluation-document I/O, measurement-to-scale mapping and diagram data.

The evaluation document is a flat JSON object whose field names are fixed
bit-exactly for interoperability: ComponentNumber, IndicatorNumber,
ExpGroupsNumber, EstimatesNumber, RoundDigsNumber, InterviewNumber,
ComponentNames, IndicatorNames, ExpertGroupes (GroupName / ExperCount),
EstimateScale and InterviewRslt (Lingvo / LBound / UBound).

Survey results are a flat list ordered by group (in ExpertGroupes order),
then component, then indicator, then expert index, which makes the expected
list length  sum over groups of experts x components x indicators.  The
optional ``FormatVersion`` field versions this layout convention; absent
means version 1.

``RoundDigsNumber`` controls display rounding of derived reports only;
documents always carry full floating precision and internal math never
rounds.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from math import fsum
from typing import Any, Sequence

from .errors import (
    DocumentParseError,
    DocumentValidationError,
    UnmappedValueError,
    Violation,
)
from .evidence import (
    Assessment,
    BodyOfEvidence,
    ExpertGroup,
    Interval,
    LinguisticRating,
    RatingScale,
    merge_assessments,
)


@dataclass(frozen=True, slots=True)
class SourceData:
    """A full evaluation document: components, indicators, groups, scale and
    the flat list of survey results."""

    component_names: tuple[str, ...]
    indicator_names: tuple[str, ...]
    expert_groups: tuple[ExpertGroup, ...]
    estimate_scale: RatingScale
    interview_results: tuple[LinguisticRating, ...]
    round_digits: int = 2
    format_version: int = 1

    def __post_init__(self):
        object.__setattr__(self, "component_names", tuple(self.component_names))
        object.__setattr__(self, "indicator_names", tuple(self.indicator_names))
        object.__setattr__(self, "expert_groups", tuple(self.expert_groups))
        object.__setattr__(self, "interview_results", tuple(self.interview_results))
        violations: list[Violation] = []
        if not self.component_names:
            violations.append(Violation("error", "ComponentNames",
                                        "at least one component required"))
        if not self.indicator_names:
            violations.append(Violation("error", "IndicatorNames",
                                        "at least one indicator required"))
        if not self.expert_groups:
            violations.append(Violation("error", "ExpertGroupes",
                                        "at least one expert group required"))
        if self.round_digits < 0:
            violations.append(Violation("error", "RoundDigsNumber",
                                        "display digits must be non-negative"))
        for position, result in enumerate(self.interview_results):
            scale_rating = self.estimate_scale.find(result.term)
            if scale_rating is None:
                violations.append(Violation(
                    "error", "InterviewRslt",
                    f"entry {position}: term {result.term!r} is not in the scale"))
            elif scale_rating.interval != result.interval:
                violations.append(Violation(
                    "error", "InterviewRslt",
                    f"entry {position}: term {result.term!r} bounds "
                    f"{result.interval} differ from the scale's "
                    f"{scale_rating.interval}"))
        if violations:
            raise DocumentValidationError(violations)

    @property
    def component_count(self) -> int:
        return len(self.component_names)

    @property
    def indicator_count(self) -> int:
        return len(self.indicator_names)

    @property
    def group_count(self) -> int:
        return len(self.expert_groups)

    @property
    def estimate_count(self) -> int:
        return len(self.estimate_scale.ratings)

    @property
    def interview_count(self) -> int:
        return len(self.interview_results)


def expected_interview_count(data: SourceData) -> int:
    """Survey size implied by the layout convention when fully populated."""
    per_expert = data.component_count * data.indicator_count
    return sum(group.expert_count * per_expert for group in data.expert_groups)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


_COUNT_FIELDS = (
    ("ComponentNumber", 1),
    ("IndicatorNumber", 1),
    ("ExpGroupsNumber", 1),
    ("EstimatesNumber", 1),
    ("RoundDigsNumber", 0),
    ("InterviewNumber", 0),
)

_LIST_FIELDS = (
    ("ComponentNames", "ComponentNumber"),
    ("IndicatorNames", "IndicatorNumber"),
    ("ExpertGroupes", "ExpGroupsNumber"),
    ("EstimateScale", "EstimatesNumber"),
    ("InterviewRslt", "InterviewNumber"),
)


def _check_rating_entry(field: str, position: int, entry: Any,
                        violations: list[Violation]) -> tuple[str, float, float] | None:
    """Validate one {Lingvo, LBound, UBound} object; None when unusable."""
    where = f"entry {position}"
    if not isinstance(entry, dict):
        violations.append(Violation("error", field, f"{where}: expected an object"))
        return None
    term = entry.get("Lingvo")
    lower = entry.get("LBound")
    upper = entry.get("UBound")
    usable = True
    if not isinstance(term, str) or not term:
        violations.append(Violation("error", field,
                                    f"{where}: Lingvo must be a non-empty string"))
        usable = False
    for key, bound in (("LBound", lower), ("UBound", upper)):
        if not _is_number(bound):
            violations.append(Violation("error", field,
                                        f"{where}: {key} must be a number"))
            usable = False
    if not usable:
        return None
    if not 0.0 <= float(lower) <= float(upper) <= 1.0:
        violations.append(Violation(
            "error", field,
            f"{where} ({term!r}): bounds must satisfy 0 <= LBound <= UBound <= 1, "
            f"got [{lower}, {upper}]"))
        return None
    return term, float(lower), float(upper)


def validate_document(obj: Any) -> list[Violation]:
    """Check a parsed JSON object against the document contract.

    Returns every violation found, never just the first; severity
    ``warning`` entries (layout consistency) do not make a document invalid.
    """
    violations: list[Violation] = []
    if not isinstance(obj, dict):
        return [Violation("error", "$", "document root must be a JSON object")]

    counts: dict[str, int] = {}
    for field, minimum in _COUNT_FIELDS:
        value = obj.get(field)
        if not _is_int(value):
            violations.append(Violation("error", field, "must be an integer"))
        elif value < minimum:
            violations.append(Violation("error", field,
                                        f"must be at least {minimum}, got {value}"))
        else:
            counts[field] = value

    for field, count_field in _LIST_FIELDS:
        value = obj.get(field)
        if not isinstance(value, list):
            violations.append(Violation("error", field, "must be a list"))
        elif count_field in counts and len(value) != counts[count_field]:
            violations.append(Violation(
                "error", field,
                f"has {len(value)} entries but {count_field} declares "
                f"{counts[count_field]}"))

    for field in ("ComponentNames", "IndicatorNames"):
        names = obj.get(field)
        if isinstance(names, list):
            for position, name in enumerate(names):
                if not isinstance(name, str) or not name:
                    violations.append(Violation(
                        "error", field,
                        f"entry {position}: must be a non-empty string"))

    groups = obj.get("ExpertGroupes")
    if isinstance(groups, list):
        for position, group in enumerate(groups):
            where = f"entry {position}"
            if not isinstance(group, dict):
                violations.append(Violation("error", "ExpertGroupes",
                                            f"{where}: expected an object"))
                continue
            name = group.get("GroupName")
            count = group.get("ExperCount")
            if not isinstance(name, str) or not name:
                violations.append(Violation(
                    "error", "ExpertGroupes",
                    f"{where}: GroupName must be a non-empty string"))
            if not _is_int(count) or count < 1:
                violations.append(Violation(
                    "error", "ExpertGroupes",
                    f"{where}: ExperCount must be a positive integer"))

    scale_bounds: dict[str, tuple[float, float]] = {}
    scale = obj.get("EstimateScale")
    if isinstance(scale, list):
        for position, entry in enumerate(scale):
            parsed = _check_rating_entry("EstimateScale", position, entry, violations)
            if parsed is None:
                continue
            term, lower, upper = parsed
            if term in scale_bounds:
                violations.append(Violation(
                    "error", "EstimateScale",
                    f"entry {position}: duplicate term {term!r}"))
            else:
                scale_bounds[term] = (lower, upper)

    results = obj.get("InterviewRslt")
    if isinstance(results, list):
        for position, entry in enumerate(results):
            parsed = _check_rating_entry("InterviewRslt", position, entry, violations)
            if parsed is None:
                continue
            term, lower, upper = parsed
            if term not in scale_bounds:
                violations.append(Violation(
                    "error", "InterviewRslt",
                    f"entry {position}: term {term!r} is not in EstimateScale"))
            elif scale_bounds[term] != (lower, upper):
                violations.append(Violation(
                    "error", "InterviewRslt",
                    f"entry {position}: term {term!r} bounds [{lower}, {upper}] "
                    f"differ from the scale's {list(scale_bounds[term])}"))

    version = obj.get("FormatVersion", 1)
    if not _is_int(version) or version != 1:
        violations.append(Violation("error", "FormatVersion",
                                    f"unsupported format version {version!r}"))

    # Layout consistency: a fully populated survey has experts x components
    # x indicators entries per group.  Mismatch is suspicious, not fatal.
    if (not violations and isinstance(groups, list)
            and "InterviewNumber" in counts):
        expected = sum(g["ExperCount"] for g in groups) \
            * counts["ComponentNumber"] * counts["IndicatorNumber"]
        if counts["InterviewNumber"] != expected:
            violations.append(Violation(
                "warning", "InterviewNumber",
                f"declares {counts['InterviewNumber']} results but the layout "
                f"convention implies {expected} "
                f"(sum of ExperCount x ComponentNumber x IndicatorNumber)"))
    return violations


def parse_source_data(document: str) -> SourceData:
    """Parse and validate an evaluation document from JSON text.

    Raises :class:`DocumentParseError` (with position) for malformed JSON
    and :class:`DocumentValidationError` (with every violation) for
    contract breaches.
    """
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno, column=exc.colno, position=exc.pos,
        ) from None
    violations = [v for v in validate_document(obj) if v.severity == "error"]
    if violations:
        raise DocumentValidationError(violations)
    scale = RatingScale(tuple(
        LinguisticRating(entry["Lingvo"],
                         Interval(float(entry["LBound"]), float(entry["UBound"])))
        for entry in obj["EstimateScale"]
    ))
    return SourceData(
        component_names=tuple(obj["ComponentNames"]),
        indicator_names=tuple(obj["IndicatorNames"]),
        expert_groups=tuple(
            ExpertGroup(entry["GroupName"], entry["ExperCount"])
            for entry in obj["ExpertGroupes"]
        ),
        estimate_scale=scale,
        interview_results=tuple(
            LinguisticRating(entry["Lingvo"],
                             Interval(float(entry["LBound"]), float(entry["UBound"])))
            for entry in obj["InterviewRslt"]
        ),
        round_digits=obj["RoundDigsNumber"],
        format_version=obj.get("FormatVersion", 1),
    )


def source_data_to_dict(data: SourceData) -> dict[str, Any]:
    """Wire-format dictionary with the exact field names, full precision."""
    def rating_entry(rating: LinguisticRating) -> dict[str, Any]:
        return {"Lingvo": rating.term,
                "LBound": rating.interval.lower,
                "UBound": rating.interval.upper}

    obj: dict[str, Any] = {
        "ComponentNumber": data.component_count,
        "IndicatorNumber": data.indicator_count,
        "ExpGroupsNumber": data.group_count,
        "EstimatesNumber": data.estimate_count,
        "RoundDigsNumber": data.round_digits,
        "InterviewNumber": data.interview_count,
        "ComponentNames": list(data.component_names),
        "IndicatorNames": list(data.indicator_names),
        "ExpertGroupes": [
            {"GroupName": g.name, "ExperCount": g.expert_count}
            for g in data.expert_groups
        ],
        "EstimateScale": [rating_entry(r) for r in data.estimate_scale.ratings],
        "InterviewRslt": [rating_entry(r) for r in data.interview_results],
    }
    if data.format_version != 1:
        obj["FormatVersion"] = data.format_version
    return obj


def serialize_source_data(data: SourceData) -> str:
    """Emit the document as JSON; parse(serialize(x)) equals x structurally."""
    return json.dumps(source_data_to_dict(data), ensure_ascii=False, indent=2)


def scale_gaps(scale: RatingScale) -> list[tuple[float, float]]:
    """Open gaps of [0, 1] not covered by any scale interval."""
    intervals = sorted(
        (r.interval.lower, r.interval.upper) for r in scale.ratings
    )
    gaps: list[tuple[float, float]] = []
    covered_to = 0.0
    if intervals[0][0] > 0.0:
        gaps.append((0.0, intervals[0][0]))
    covered_to = intervals[0][1]
    for lower, upper in intervals[1:]:
        if lower > covered_to:
            gaps.append((covered_to, lower))
        covered_to = max(covered_to, upper)
    if covered_to < 1.0:
        gaps.append((covered_to, 1.0))
    return gaps


def map_measurement_to_rating(value: float, scale: RatingScale) -> LinguisticRating:
    """Scale rating with the narrowest interval containing ``value``.

    Ties break by scale order.  A value no interval covers raises
    :class:`UnmappedValueError` listing the uncovered gaps.
    """
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"measurement must lie in [0, 1], got {value}")
    best: LinguisticRating | None = None
    for rating in scale.ratings:
        if rating.interval.contains(value):
            if best is None or rating.interval.width < best.interval.width:
                best = rating
    if best is not None:
        return best
    gaps = scale_gaps(scale)
    formatted = ", ".join(f"({lo:g}, {hi:g})" for lo, hi in gaps)
    raise UnmappedValueError(
        f"value {value:g} falls outside every scale interval; "
        f"uncovered gaps: {formatted}",
        value=value, gaps=gaps,
    )


def assessments_by_group(data: SourceData, component_index: int,
                         indicator_index: int,
                         ) -> list[tuple[ExpertGroup, list[Assessment]]]:
    """Slice the flat survey layout for one (component, indicator) pair.

    Entries are ordered by group, then component, then indicator, then
    expert; duplicates within a group merge into single assessments with
    summed voter counts.
    """
    if not 0 <= component_index < data.component_count:
        raise IndexError(f"component index {component_index} out of range")
    if not 0 <= indicator_index < data.indicator_count:
        raise IndexError(f"indicator index {indicator_index} out of range")
    per_expert = data.component_count * data.indicator_count
    pair_offset = component_index * data.indicator_count + indicator_index
    out: list[tuple[ExpertGroup, list[Assessment]]] = []
    offset = 0
    for group in data.expert_groups:
        start = offset + pair_offset * group.expert_count
        end = start + group.expert_count
        if end > data.interview_count:
            raise DocumentValidationError([Violation(
                "error", "InterviewRslt",
                f"group {group.name!r} needs results up to index {end} for "
                f"component {component_index}, indicator {indicator_index}, "
                f"but only {data.interview_count} are present")])
        answers = data.interview_results[start:end]
        assessments = merge_assessments(
            Assessment(rating, 1) for rating in answers
        )
        out.append((group, assessments))
        offset += group.expert_count * per_expert
    return out


@dataclass(frozen=True, slots=True)
class DiagramRow:
    """One bar of the cumulated-mass diagram for one source."""

    interval: Interval
    source_name: str
    mass: float
    cumulative_mass: float


def diagram_data(bodies: Sequence[BodyOfEvidence]) -> list[DiagramRow]:
    """Cumulative mass per source, intervals ascending by lower then upper.

    Overlaying the per-source curves shows agreement (overlapping regions)
    and conflict; each curve ends at 1.
    """
    rows: list[DiagramRow] = []
    for body in bodies:
        elements = body.sorted_elements()
        masses = [e.mass for e in elements]
        for position, element in enumerate(elements):
            rows.append(DiagramRow(
                element.interval,
                body.source_name,
                element.mass,
                fsum(masses[:position + 1]),
            ))
    return rows


def diagram_row_dicts(rows: Sequence[DiagramRow]) -> list[dict[str, Any]]:
    return [
        {"lower": row.interval.lower, "upper": row.interval.upper,
         "source": row.source_name, "mass": row.mass,
         "cumulative": row.cumulative_mass}
        for row in rows
    ]


def diagram_csv(rows: Sequence[DiagramRow]) -> str:
    """CSV form of the diagram rows; header is part of the wire format."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["lower", "upper", "source", "mass", "cumulative"])
    for row in rows:
        writer.writerow([row.interval.lower, row.interval.upper,
                         row.source_name, row.mass, row.cumulative_mass])
    return buffer.getvalue()


@dataclass(frozen=True, slots=True)
class ObservationRecord:
    """One executed query: hit count, access frequency and a timestamp."""

    query: str
    hits: float
    frequency: float
    timestamp: str

    @property
    def time(self) -> float:
        """POSIX seconds; naive timestamps are read as UTC for determinism."""
        text = self.timestamp.replace("Z", "+00:00")
        moment = datetime.fromisoformat(text)
        if moment.tzinfo is None:
            moment = moment.replace(tzinfo=timezone.utc)
        return moment.timestamp()


def parse_observations(document: str) -> list[ObservationRecord]:
    """Parse the observation file: a JSON array of query records.

    Each record carries ``query`` (text), ``hits`` and ``frequency``
    (non-negative numbers) and ``timestamp`` (ISO-8601 text).  Records
    sharing a timestamp form one snapshot.
    """
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno, column=exc.colno, position=exc.pos,
        ) from None
    violations: list[Violation] = []
    if not isinstance(obj, list):
        raise DocumentValidationError([
            Violation("error", "$", "observation file must be a JSON array")])
    if not obj:
        raise DocumentValidationError([
            Violation("error", "$", "observation file must not be empty")])
    records: list[ObservationRecord] = []
    for position, entry in enumerate(obj):
        where = f"entry {position}"
        if not isinstance(entry, dict):
            violations.append(Violation("error", "$", f"{where}: expected an object"))
            continue
        query = entry.get("query")
        hits = entry.get("hits")
        frequency = entry.get("frequency")
        timestamp = entry.get("timestamp")
        usable = True
        if not isinstance(query, str):
            violations.append(Violation("error", "query",
                                        f"{where}: must be a string"))
            usable = False
        for key, value in (("hits", hits), ("frequency", frequency)):
            if not _is_number(value) or value < 0:
                violations.append(Violation(
                    "error", key, f"{where}: must be a non-negative number"))
                usable = False
        if not isinstance(timestamp, str):
            violations.append(Violation("error", "timestamp",
                                        f"{where}: must be ISO-8601 text"))
            usable = False
        if usable:
            record = ObservationRecord(query, float(hits), float(frequency),
                                       timestamp)
            try:
                record.time
            except ValueError:
                violations.append(Violation(
                    "error", "timestamp",
                    f"{where}: {timestamp!r} is not valid ISO-8601"))
            else:
                records.append(record)
    if violations:
        raise DocumentValidationError(violations)
    return records


def group_snapshots(records: Sequence[ObservationRecord],
                    ) -> list[tuple[float, str, list[ObservationRecord]]]:
    """Group records into time-ordered snapshots of equal timestamp."""
    by_time: dict[float, tuple[str, list[ObservationRecord]]] = {}
    for record in records:
        moment = record.time
        if moment in by_time:
            by_time[moment][1].append(record)
        else:
            by_time[moment] = (record.timestamp, [record])
    return [(moment, label, members)
            for moment, (label, members) in sorted(by_time.items())]
