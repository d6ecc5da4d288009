"""Stateless HTTP computation service.

Every endpoint is a pure function of the request body: no timestamps, no
storage, no sessions, so identical requests yield identical responses and
any number of concurrent requests behave like sequential execution.

Endpoints:

* ``POST /evaluate``   evaluation document -> run report
* ``POST /indicators`` observation array -> indicator report
* ``POST /diagram``    evaluation document -> diagram rows
* ``GET /health``      liveness probe
* ``GET /schema``      machine-readable format documentation

Validation problems return 400 with every violation listed; a fusion that
aborts in total conflict returns 422 (the report still carries the entries
of pairs that did combine); unexpected failures return 500 with no partial
results.  CORS headers are permissive so a browser client served from any
origin can call the service.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from . import __version__
from .combination import MergeSemantics
from .errors import DocumentParseError, DocumentValidationError
from .evidence import build_evidence_table
from .indicators import NormalizationMode
from .report import (
    build_indicator_report,
    build_run_report,
    report_failures,
)
from .survey import (
    assessments_by_group,
    diagram_data,
    diagram_row_dicts,
    parse_observations,
    parse_source_data,
)

log = logging.getLogger(__name__)

SCHEMA = {
    "service": "innofuse",
    "version": __version__,
    "endpoints": {
        "POST /evaluate": "evaluation document JSON -> run report JSON; "
                          "query params: semantics=envelope|intersection, "
                          "round=<digits>",
        "POST /indicators": "observation array JSON -> indicator report "
                            "JSON; query params: "
                            "norm=linear|statistical|exponential, "
                            "round=<digits>",
        "POST /diagram": "evaluation document JSON -> diagram row array; "
                         "query params: component=<index>, "
                         "indicator=<index>",
        "GET /health": "liveness probe",
        "GET /schema": "this document",
    },
    "evaluation_document": {
        "ComponentNumber": "positive integer, must equal len(ComponentNames)",
        "IndicatorNumber": "positive integer, must equal len(IndicatorNames)",
        "ExpGroupsNumber": "positive integer, must equal len(ExpertGroupes)",
        "EstimatesNumber": "positive integer, must equal len(EstimateScale)",
        "RoundDigsNumber": "non-negative integer, display rounding only",
        "InterviewNumber": "non-negative integer, must equal "
                           "len(InterviewRslt)",
        "ComponentNames": "list of non-empty strings",
        "IndicatorNames": "list of non-empty strings",
        "ExpertGroupes": "list of {GroupName: string, ExperCount: int >= 1}",
        "EstimateScale": "list of {Lingvo: string, LBound: number, "
                         "UBound: number} with 0 <= LBound <= UBound <= 1",
        "InterviewRslt": "list of {Lingvo, LBound, UBound}; each term must "
                         "exist in EstimateScale with identical bounds; "
                         "ordered by group, then component, then indicator, "
                         "then expert",
        "FormatVersion": "optional integer; absent means 1",
    },
    "observation_record": {
        "query": "string",
        "hits": "non-negative number (documents found)",
        "frequency": "non-negative number (access frequency)",
        "timestamp": "ISO-8601 text; records sharing a timestamp form one "
                     "snapshot",
    },
    "diagram_csv_header": "lower,upper,source,mass,cumulative",
}


def _query_param(params: dict[str, list[str]], name: str,
                 default: str) -> str:
    values = params.get(name)
    return values[-1] if values else default


class ServiceHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = f"innofuse/{__version__}"

    def log_message(self, format: str, *args) -> None:  # noqa: A002
        log.debug("%s - %s", self.address_string(), format % args)

    def _send(self, status: int, payload) -> None:
        body = json.dumps(payload, ensure_ascii=False, indent=2).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_body(self) -> str:
        length = int(self.headers.get("Content-Length", 0))
        return self.rfile.read(length).decode("utf-8")

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        path = urlsplit(self.path).path
        if path == "/health":
            self._send(200, {"status": "ok", "version": __version__})
        elif path == "/schema":
            self._send(200, SCHEMA)
        else:
            self._send(404, {"error": "not_found", "path": path})

    def do_POST(self) -> None:
        split = urlsplit(self.path)
        params = parse_qs(split.query)
        # Drain the body up front so keep-alive connections stay in sync
        # even for unroutable paths.
        body = self._read_body()
        try:
            if split.path == "/evaluate":
                self._evaluate(body, params)
            elif split.path == "/indicators":
                self._indicators(body, params)
            elif split.path == "/diagram":
                self._diagram(body, params)
            else:
                self._send(404, {"error": "not_found", "path": split.path})
        except DocumentParseError as exc:
            self._send(400, {
                "error": "parse",
                "message": str(exc),
                "line": exc.line,
                "column": exc.column,
                "position": exc.position,
            })
        except DocumentValidationError as exc:
            self._send(400, {
                "error": "validation",
                "violations": [
                    {"severity": v.severity, "field": v.field,
                     "message": v.message}
                    for v in exc.violations
                ],
            })
        except (ValueError, IndexError) as exc:
            self._send(400, {"error": "bad_request", "message": str(exc)})
        except Exception:
            log.exception("request failed")
            self._send(500, {"error": "internal"})

    def _evaluate(self, body: str, params: dict[str, list[str]]) -> None:
        data = parse_source_data(body)
        semantics = MergeSemantics(_query_param(params, "semantics", "envelope"))
        round_param = _query_param(params, "round", "")
        round_digits = int(round_param) if round_param else None
        report = build_run_report(data, semantics, round_digits=round_digits)
        failures = report_failures(report)
        if failures:
            self._send(422, {
                "error": "total_conflict",
                "failures": [
                    {"component": f["component"], "indicator": f["indicator"],
                     "step": f["error"]["step"]}
                    for f in failures
                ],
                "report": report,
            })
        else:
            self._send(200, report)

    def _indicators(self, body: str, params: dict[str, list[str]]) -> None:
        records = parse_observations(body)
        mode = NormalizationMode(_query_param(params, "norm", "linear"))
        round_param = _query_param(params, "round", "4")
        report = build_indicator_report(records, mode,
                                        round_digits=int(round_param))
        self._send(200, report)

    def _diagram(self, body: str, params: dict[str, list[str]]) -> None:
        data = parse_source_data(body)
        component = int(_query_param(params, "component", "0"))
        indicator = int(_query_param(params, "indicator", "0"))
        if data.interview_count == 0:
            self._send(200, [])
            return
        groups = assessments_by_group(data, component, indicator)
        bodies = [build_evidence_table(assessments, group)
                  for group, assessments in groups]
        self._send(200, diagram_row_dicts(diagram_data(bodies)))


def make_server(host: str = "127.0.0.1", port: int = 8420) -> ThreadingHTTPServer:
    """Build (but do not start) the threading HTTP server; tests use this."""
    return ThreadingHTTPServer((host, port), ServiceHandler)


def serve(host: str = "127.0.0.1", port: int = 8420) -> None:
    """Run the service until interrupted."""
    server = make_server(host, port)
    log.info("serving on http://%s:%d", host, port)
    try:
        server.serve_forever()
    finally:
        server.server_close()
