"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 I/O failure, 3 computation
failure (total conflict or a demo regression mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .combination import MergeSemantics
from .demo import DEMO_EXPECTED, demo_document, demo_document_json
from .errors import (
    DocumentParseError,
    DocumentValidationError,
    InnofuseError,
)
from .evidence import build_evidence_table
from .indicators import NormalizationMode
from .report import (
    build_indicator_report,
    build_run_report,
    render_indicator_table,
    render_report_csv,
    render_report_table,
    report_failures,
    report_to_json,
)
from .survey import (
    assessments_by_group,
    diagram_csv,
    diagram_data,
    diagram_row_dicts,
    parse_observations,
    parse_source_data,
    serialize_source_data,
    validate_document,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_COMPUTATION = 3


class CliIOError(Exception):
    """Signals an I/O failure that should exit with EXIT_IO."""


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliIOError(f"cannot read {path}: {exc.strerror or exc}")


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        try:
            Path(output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliIOError(f"cannot write {output}: {exc.strerror or exc}")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def cmd_validate(args: argparse.Namespace) -> int:
    text = _read_text(args.path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"ERROR [JSON]: line {exc.lineno}, column {exc.colno}: {exc.msg}")
        return EXIT_VALIDATION
    violations = validate_document(obj)
    for violation in violations:
        print(violation)
    errors = [v for v in violations if v.severity == "error"]
    if errors:
        print(f"invalid: {len(errors)} error(s)")
        return EXIT_VALIDATION
    print("valid")
    return EXIT_OK


def _print_validation_failure(exc: InnofuseError) -> int:
    if isinstance(exc, DocumentParseError):
        print(f"ERROR [JSON]: {exc}", file=sys.stderr)
    elif isinstance(exc, DocumentValidationError):
        for violation in exc.violations:
            print(violation, file=sys.stderr)
    else:
        print(f"ERROR: {exc}", file=sys.stderr)
    return EXIT_VALIDATION


def cmd_evaluate(args: argparse.Namespace) -> int:
    text = _read_text(args.path)
    try:
        data = parse_source_data(text)
        report = build_run_report(
            data,
            MergeSemantics(args.semantics),
            NormalizationMode(args.norm),
            round_digits=args.round,
            timestamp=None if args.no_timestamp else _now(),
        )
    except (DocumentParseError, DocumentValidationError) as exc:
        return _print_validation_failure(exc)
    if args.format == "json":
        _write_output(report_to_json(report) + "\n", args.output)
    elif args.format == "csv":
        _write_output(render_report_csv(report), args.output)
    else:
        _write_output(render_report_table(report), args.output)
    failures = report_failures(report)
    for failure in failures:
        error = failure["error"]
        print(f"total conflict: component {failure['component']!r}, "
              f"indicator {failure['indicator']!r}, step {error['step']}",
              file=sys.stderr)
    return EXIT_COMPUTATION if failures else EXIT_OK


def cmd_indicators(args: argparse.Namespace) -> int:
    text = _read_text(args.path)
    try:
        records = parse_observations(text)
        report = build_indicator_report(
            records,
            NormalizationMode(args.norm),
            round_digits=args.round,
            timestamp=None if args.no_timestamp else _now(),
        )
    except (DocumentParseError, DocumentValidationError) as exc:
        return _print_validation_failure(exc)
    if args.format == "json":
        _write_output(report_to_json(report) + "\n", args.output)
    else:
        _write_output(render_indicator_table(report), args.output)
    return EXIT_OK


def cmd_diagram(args: argparse.Namespace) -> int:
    text = _read_text(args.path)
    try:
        data = parse_source_data(text)
    except (DocumentParseError, DocumentValidationError) as exc:
        return _print_validation_failure(exc)
    if data.interview_count == 0:
        print("warning: no interview results, diagram is empty",
              file=sys.stderr)
        rows = []
    else:
        try:
            groups = assessments_by_group(data, args.component, args.indicator)
        except (DocumentValidationError, IndexError) as exc:
            print(f"ERROR: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
        bodies = [build_evidence_table(assessments, group)
                  for group, assessments in groups]
        rows = diagram_data(bodies)
    if args.format == "json":
        text_out = json.dumps(diagram_row_dicts(rows), ensure_ascii=False,
                              indent=2) + "\n"
    else:
        text_out = diagram_csv(rows)
    _write_output(text_out, args.output)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(args.host, args.port)
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    if args.write_document:
        _write_output(demo_document_json() + "\n", args.write_document)
        print(f"demo document written to {args.write_document}")
        return EXIT_OK
    data = demo_document()
    report = build_run_report(data, MergeSemantics.ENVELOPE, round_digits=4)
    print(render_report_table(report))
    entry = report["results"][0]
    expected = DEMO_EXPECTED
    tolerance = expected["bel_pl_tolerance"]
    print("regression check against the bundled expected values:")
    ok = True

    def check(label: str, actual: float, target: float, tol: float) -> None:
        nonlocal ok
        good = abs(actual - target) <= tol
        ok = ok and good
        status = "ok" if good else "MISMATCH"
        print(f"  {label}: {actual:.4f} expected {target:.4f} "
              f"(±{tol:g}) {status}")

    first = entry["steps"][0]
    check("step 1 conflict", first["conflict"],
          expected["first_step"]["conflict"],
          expected["first_step"]["conflict_tolerance"])
    check("step 1 K", first["k"], expected["first_step"]["k"],
          expected["first_step"]["k_tolerance"])
    by_interval = {(e["lower"], e["upper"]): e for e in entry["estimates"]}
    expected_intervals = {tuple(iv) for iv in expected["intervals"]}
    if set(by_interval) != expected_intervals:
        ok = False
        print(f"  focal intervals MISMATCH: {sorted(by_interval)}")
    else:
        print(f"  focal intervals: {len(by_interval)} as expected")
    for interval, (bel, pl) in expected["bel_pl"].items():
        estimate = by_interval[interval]
        check(f"Bel{list(interval)}", estimate["belief"], bel, tolerance)
        check(f"Pl{list(interval)}", estimate["plausibility"], pl, tolerance)
    top = entry["estimates"][0]
    top_ok = ((top["lower"], top["upper"]) == expected["top"]["interval"]
              and top["term"] == expected["top"]["term"])
    ok = ok and top_ok
    print(f"  top estimate: {top['term']} [{top['lower']}, {top['upper']}] "
          f"{'ok' if top_ok else 'MISMATCH'}")
    print("demo check:", "PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_COMPUTATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="innofuse",
        description="Fuse interval-valued evidence and compute "
                    "innovativeness indicators.",
    )
    parser.add_argument("--version", action="version",
                        version=f"innofuse {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser(
        "validate", help="check an evaluation document")
    validate.add_argument("path")
    validate.set_defaults(func=cmd_validate)

    evaluate = commands.add_parser(
        "evaluate", help="run the full fusion pipeline over a document")
    evaluate.add_argument("path")
    evaluate.add_argument("--semantics", choices=["envelope", "intersection"],
                          default="envelope",
                          help="merge rule for overlapping intervals")
    evaluate.add_argument("--norm",
                          choices=["linear", "statistical", "exponential"],
                          default="linear",
                          help="normalization mode recorded in metadata")
    evaluate.add_argument("--format", choices=["table", "json", "csv"],
                          default="table")
    evaluate.add_argument("--round", type=int, default=None,
                          help="display digits (default: document's "
                               "RoundDigsNumber)")
    evaluate.add_argument("--no-timestamp", action="store_true",
                          help="omit the generation timestamp "
                               "(deterministic output)")
    evaluate.add_argument("--output", default=None, help="write to file")
    evaluate.set_defaults(func=cmd_evaluate)

    indicators = commands.add_parser(
        "indicators", help="compute Nov/Rel/Imp from an observation file")
    indicators.add_argument("path")
    indicators.add_argument("--norm",
                            choices=["linear", "statistical", "exponential"],
                            default="linear")
    indicators.add_argument("--format", choices=["table", "json"],
                            default="table")
    indicators.add_argument("--round", type=int, default=4)
    indicators.add_argument("--no-timestamp", action="store_true")
    indicators.add_argument("--output", default=None)
    indicators.set_defaults(func=cmd_indicators)

    diagram = commands.add_parser(
        "diagram", help="emit cumulated-mass diagram data per group")
    diagram.add_argument("path")
    diagram.add_argument("--component", type=int, default=0)
    diagram.add_argument("--indicator", type=int, default=0)
    diagram.add_argument("--format", choices=["csv", "json"], default="csv")
    diagram.add_argument("--output", default=None)
    diagram.set_defaults(func=cmd_diagram)

    serve = commands.add_parser(
        "serve", help="run the stateless HTTP computation service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8420)
    serve.set_defaults(func=cmd_serve)

    demo = commands.add_parser(
        "demo", help="evaluate the bundled three-group document and check "
                     "it against its expected results")
    demo.add_argument("--write-document", default=None, metavar="PATH",
                      help="export the bundled document as JSON instead")
    demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliIOError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_IO
    except KeyboardInterrupt:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
