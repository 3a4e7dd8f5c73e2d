"""
Scenario and report persistence.

Handles:
- Parsing scenario JSON into validated Scenario models
- Writing scenarios back out (parse(emit(s)) == s)
- The SHA-256 scenario digest carried by every report
- Writing reports as text, structured JSON or PDF
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from src.auditor.results import Report
from src.errors import ReportWriteError, ScenarioError
from src.pdf_export import generate_pdf
from src.report_format import emit_report
from src.scenario import Scenario

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("text", "structured", "pdf")


def _plain(scenario: Scenario) -> dict:
    return scenario.model_dump(mode="json", exclude_none=True)


def parse_scenario(text: str) -> Scenario:
    """
    Validate scenario JSON text.

    Raises:
        ScenarioError: malformed JSON, a schema violation or a dangling reference
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"scenario is not valid JSON: {e}") from e
    try:
        return Scenario.model_validate(data)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise ScenarioError(f"invalid scenario: {problems}") from e


def emit_scenario(scenario: Scenario) -> str:
    return json.dumps(_plain(scenario), indent=2, ensure_ascii=False) + "\n"


def scenario_digest(scenario: Scenario) -> str:
    """SHA-256 of the canonical (sorted-key, compact) scenario JSON."""
    canonical = json.dumps(_plain(scenario), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def load_scenario(path: Union[str, Path]) -> Scenario:
    """
    Read and validate a scenario file.

    OSError (missing or unreadable file) propagates unchanged.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    scenario = parse_scenario(text)
    logger.debug("loaded scenario %s from %s", scenario.name, path)
    return scenario


def save_scenario(scenario: Scenario, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_scenario(scenario), encoding="utf-8")
    return path


def save_report(report: Report, path: Union[str, Path], fmt: str = "structured") -> Path:
    """
    Write a report to a file.

    Raises:
        ReportWriteError: unknown format or the file could not be written
    """
    if fmt not in REPORT_FORMATS:
        raise ReportWriteError(f"unknown report format: {fmt}")
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "pdf":
            generate_pdf(report, str(path))
        else:
            path.write_bytes(emit_report(report, fmt))
    except OSError as e:
        raise ReportWriteError(f"cannot write report to {path}: {e}") from e
    logger.info("report written to %s", path)
    return path
