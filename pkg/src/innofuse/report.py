"""Run-report assembly and rendering.

Reports are plain dictionaries with a fixed key order so that JSON output
is deterministic; table and CSV renderings apply display rounding, while
JSON always carries full floating precision (the consumer rounds).
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from .combination import MergeSemantics, combine_all, rank
from .errors import TotalConflictError
from .evidence import build_evidence_table, expectation_bounds
from .indicators import (
    NormalizationMode,
    ObservationSet,
    TimeSeries,
    implementability,
    local_maxima,
    normalize,
    novelty,
    relevance,
)
from .survey import (
    ObservationRecord,
    SourceData,
    assessments_by_group,
    diagram_data,
    diagram_row_dicts,
    group_snapshots,
)


def build_run_report(data: SourceData,
                     semantics: MergeSemantics = MergeSemantics.ENVELOPE,
                     normalization: NormalizationMode = NormalizationMode.LINEAR,
                     round_digits: int | None = None,
                     timestamp: str | None = None) -> dict[str, Any]:
    """Run the full evaluation pipeline for every (component, indicator) pair.

    A total conflict in one pair is reported in that pair's entry (with the
    failing step index); the remaining pairs are still evaluated.
    """
    metadata: dict[str, Any] = {
        "semantics": semantics.value,
        "normalization": normalization.value,
        "fusion_order": [g.name for g in data.expert_groups],
        "round_digits": data.round_digits if round_digits is None else round_digits,
    }
    if timestamp is not None:
        metadata["generated_at"] = timestamp
    results: list[dict[str, Any]] = []
    for component_index, component in enumerate(data.component_names):
        for indicator_index, indicator in enumerate(data.indicator_names):
            entry: dict[str, Any] = {
                "component_index": component_index,
                "component": component,
                "indicator_index": indicator_index,
                "indicator": indicator,
            }
            groups = assessments_by_group(data, component_index, indicator_index)
            bodies = [build_evidence_table(assessments, group)
                      for group, assessments in groups]
            try:
                result = combine_all(bodies, semantics)
            except TotalConflictError as exc:
                entry["status"] = "total_conflict"
                entry["error"] = {"step": exc.step, "left": exc.left,
                                  "right": exc.right, "message": str(exc)}
                results.append(entry)
                continue
            estimates = rank(result, data.estimate_scale)
            lower, upper = expectation_bounds(result.combined)
            entry["status"] = "ok"
            entry["steps"] = [
                {"step": s.index, "left": s.left, "right": s.right,
                 "conflict": s.conflict_mass, "agreement": s.agreement_mass,
                 "k": s.k_constant}
                for s in result.steps
            ]
            entry["estimates"] = [
                {"rank": position, "lower": e.interval.lower,
                 "upper": e.interval.upper, "term": e.term, "mass": e.mass,
                 "belief": e.belief, "plausibility": e.plausibility}
                for position, e in enumerate(estimates, start=1)
            ]
            entry["expectation"] = {"lower": lower, "upper": upper}
            entry["diagram"] = diagram_row_dicts(diagram_data(bodies))
            results.append(entry)
    return {"metadata": metadata, "results": results}


def report_failures(report: dict[str, Any]) -> list[dict[str, Any]]:
    return [entry for entry in report["results"] if entry["status"] != "ok"]


def build_indicator_report(records: Sequence[ObservationRecord],
                           mode: NormalizationMode = NormalizationMode.LINEAR,
                           round_digits: int = 4,
                           timestamp: str | None = None) -> dict[str, Any]:
    """Novelty/relevance per snapshot plus implementability over the series.

    Records sharing a timestamp form one snapshot; per-query normalized
    values are included for audit.
    """
    metadata: dict[str, Any] = {
        "normalization": mode.value,
        "round_digits": round_digits,
    }
    if timestamp is not None:
        metadata["generated_at"] = timestamp
    snapshots = group_snapshots(records)
    snapshot_entries: list[dict[str, Any]] = []
    nov_points: list[tuple[float, float]] = []
    rel_points: list[tuple[float, float]] = []
    for moment, label, members in snapshots:
        hits = ObservationSet(tuple(r.hits for r in members),
                              tuple(r.query for r in members))
        frequencies = ObservationSet(tuple(r.frequency for r in members),
                                     tuple(r.query for r in members))
        normalized_hits = normalize(hits, mode)
        normalized_frequencies = normalize(frequencies, mode)
        nov = novelty(hits, mode)
        rel = relevance(frequencies, mode)
        nov_points.append((moment, nov))
        rel_points.append((moment, rel))
        snapshot_entries.append({
            "timestamp": label,
            "time": moment,
            "novelty": nov,
            "relevance": rel,
            "queries": [
                {"query": r.query, "hits": r.hits, "frequency": r.frequency,
                 "normalized_hits": nh, "normalized_frequency": nf}
                for r, nh, nf in zip(members, normalized_hits,
                                     normalized_frequencies)
            ],
        })
    if len(snapshots) < 2:
        imp_value = 0.0
        imp_note = ("fewer than two snapshots: no recovery observable, "
                    "worst case assumed")
    else:
        nov_series = TimeSeries(tuple(nov_points))
        rel_series = TimeSeries(tuple(rel_points))
        imp_value = implementability(nov_series, rel_series)
        short = [name for name, series in (("novelty", nov_series),
                                           ("relevance", rel_series))
                 if len(local_maxima(series)) < 2]
        imp_note = None
        if short:
            imp_note = (f"fewer than two local maxima in the "
                        f"{' and '.join(short)} series: worst-case gap assumed")
    return {
        "metadata": metadata,
        "snapshots": snapshot_entries,
        "implementability": {"value": imp_value, "note": imp_note},
    }


def report_to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, ensure_ascii=False, indent=2)


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}f}"


def render_report_table(report: dict[str, Any]) -> str:
    """Human-readable rendering with display rounding per round_digits."""
    meta = report["metadata"]
    digits = meta["round_digits"]
    lines: list[str] = []
    order = " -> ".join(meta["fusion_order"])
    lines.append(f"Evaluation report (semantics: {meta['semantics']}; "
                 f"fusion order: {order})")
    if "generated_at" in meta:
        lines.append(f"generated at: {meta['generated_at']}")
    for entry in report["results"]:
        lines.append("")
        lines.append(f"Component {entry['component']!r} / "
                     f"indicator {entry['indicator']!r}")
        if entry["status"] != "ok":
            error = entry["error"]
            lines.append(f"  TOTAL CONFLICT at step {error['step']} "
                         f"({error['left']} with {error['right']}): "
                         f"no combined result")
            continue
        for step in entry["steps"]:
            lines.append(f"  step {step['step']}: {step['left']} (+) "
                         f"{step['right']}: conflict="
                         f"{_fmt(step['conflict'], digits)}, "
                         f"K={_fmt(step['k'], digits)}")
        expectation = entry["expectation"]
        lines.append(f"  expectation bounds: "
                     f"[{_fmt(expectation['lower'], digits)}, "
                     f"{_fmt(expectation['upper'], digits)}]")
        lines.append(f"  {'rank':>4}  {'interval':<16} {'term':<24} "
                     f"{'mass':>8} {'Bel':>8} {'Pl':>8}")
        for estimate in entry["estimates"]:
            interval = (f"[{_fmt(estimate['lower'], digits)}, "
                        f"{_fmt(estimate['upper'], digits)}]")
            term = estimate["term"] or "-"
            lines.append(f"  {estimate['rank']:>4}  {interval:<16} {term:<24} "
                         f"{_fmt(estimate['mass'], digits):>8} "
                         f"{_fmt(estimate['belief'], digits):>8} "
                         f"{_fmt(estimate['plausibility'], digits):>8}")
    return "\n".join(lines) + "\n"


def render_report_csv(report: dict[str, Any]) -> str:
    """Ranked estimates as CSV (one row per estimate), display-rounded."""
    digits = report["metadata"]["round_digits"]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["component_index", "component", "indicator_index",
                     "indicator", "rank", "lower", "upper", "term", "mass",
                     "belief", "plausibility"])
    for entry in report["results"]:
        if entry["status"] != "ok":
            continue
        for estimate in entry["estimates"]:
            writer.writerow([
                entry["component_index"], entry["component"],
                entry["indicator_index"], entry["indicator"],
                estimate["rank"], _fmt(estimate["lower"], digits),
                _fmt(estimate["upper"], digits), estimate["term"] or "",
                _fmt(estimate["mass"], digits),
                _fmt(estimate["belief"], digits),
                _fmt(estimate["plausibility"], digits),
            ])
    return buffer.getvalue()


def render_indicator_table(report: dict[str, Any]) -> str:
    meta = report["metadata"]
    digits = meta["round_digits"]
    lines = [f"Indicator report (normalization: {meta['normalization']})"]
    if "generated_at" in meta:
        lines.append(f"generated at: {meta['generated_at']}")
    for snapshot in report["snapshots"]:
        lines.append(f"snapshot {snapshot['timestamp']}: "
                     f"Nov={_fmt(snapshot['novelty'], digits)} "
                     f"Rel={_fmt(snapshot['relevance'], digits)} "
                     f"({len(snapshot['queries'])} queries)")
    imp = report["implementability"]
    lines.append(f"implementability: {_fmt(imp['value'], digits)}")
    if imp["note"]:
        lines.append(f"note: {imp['note']}")
    return "\n".join(lines) + "\n"
