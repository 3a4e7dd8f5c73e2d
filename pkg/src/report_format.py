"""
Report emission.

Two byte-stable renderings of a Report:
- text: one line per check, sections in run order
- structured: JSON with sorted keys, two-space indent and every float
  written with nine digits after the point
"""

import json
from typing import Any, List

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, Report, SectionReport

FLOAT_FORMAT = "{:.9f}"
INDENT = "  "


def format_float(value: float) -> str:
    return FLOAT_FORMAT.format(value)


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    raise TypeError(f"cannot render {type(value).__name__} in a report")


def _render(value: Any, depth: int) -> str:
    pad = INDENT * (depth + 1)
    end = INDENT * depth
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_render(value[k], depth + 1)}"
                 for k in sorted(value, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [pad + _render(v, depth + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return _scalar(value)


def render_structured(data: Any) -> str:
    """Sorted-key JSON text with fixed float formatting and a trailing newline."""
    return _render(data, 0) + "\n"


def inline_text(value: Any) -> str:
    """Single-line rendering for witnesses and data in the text format."""
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {inline_text(value[k])}" for k in sorted(value, key=str)) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(inline_text(v) for v in value) + "]"
    if isinstance(value, str):
        return value
    return _scalar(value)


def _result_line(result: CheckResult) -> List[str]:
    subject = f" ({result.subject})" if result.subject else ""
    lines = [f"[{result.status}] {result.check_id}{subject}: {result.message}"]
    if result.witness:
        lines.append(f"    witness: {inline_text(result.witness)}")
    return lines


def _section_lines(section: SectionReport) -> List[str]:
    lines = [f"== {section.name} =="]
    for result in section.results:
        lines.extend(_result_line(result))
    for key in sorted(section.data):
        lines.append(f"  {key}: {inline_text(section.data[key])}")
    for message in section.diagnostics:
        lines.append(f"  note: {message}")
    return lines


def render_text(report: Report) -> str:
    lines = [
        f"ccspace {report.tool_version} report (schema {report.schema_version})",
        f"scenario: {report.scenario_name} sha256:{report.scenario_digest}",
        f"command: {report.command}  seed: {report.seed}",
        "",
    ]
    for section in report.sections:
        lines.extend(_section_lines(section))
        lines.append("")
    counts = ", ".join(f"{report.count(status)} {status.value}" for status in CheckStatus)
    lines.append(f"summary: {counts}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "text") -> bytes:
    """
    Render a report as UTF-8 bytes.

    Raises:
        ValueError: unknown format (pdf is written by pdf_export)
    """
    if fmt == "text":
        return render_text(report).encode("utf-8")
    if fmt == "structured":
        return render_structured(report.to_dict()).encode("utf-8")
    raise ValueError(f"unknown report format: {fmt}")
