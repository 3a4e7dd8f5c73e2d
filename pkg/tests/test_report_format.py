import json

import pytest

from src.auditor.checklist import CheckStatus
from src.auditor.results import Report, SectionReport, make_result
from src.report_format import emit_report, format_float, inline_text, render_structured


@pytest.fixture
def report():
    section = SectionReport("limits")
    section.add(make_result("limits_within_2eps", CheckStatus.PASS, "1 detected limits pairwise within 2ε",
                            [], "full"))
    section.add(make_result("closure_adds_limits", CheckStatus.FAIL, "Cl□(support) ≠ support ∪ D",
                            ["e"], "truncated"))
    section.data = {"epsilon": 0.2, "sequences": {"full": {"detected": {"e": 4}}}}
    section.note("weights default to 0 for: e")
    return Report("limits", "tiny-cog", "ab" * 32, "0.1.0", seed=7, sections=[section])


def test_floats_have_nine_digits():
    assert format_float(0.2) == "0.200000000"
    assert render_structured({"x": 0.1 + 0.2}) == '{\n  "x": 0.300000000\n}\n'


def test_structured_keys_are_sorted():
    text = render_structured({"b": 1, "a": [True, None, "s"], "c": {}})
    assert text == '{\n  "a": [\n    true,\n    null,\n    "s"\n  ],\n  "b": 1,\n  "c": {}\n}\n'


def test_structured_report_is_valid_json(report):
    data = json.loads(emit_report(report, "structured"))
    assert data["command"] == "limits"
    assert data["scenario"] == {"name": "tiny-cog", "digest": "ab" * 32}
    assert data["summary"]["passed"] == 1
    assert data["summary"]["discrepancies"] == 1
    section = data["sections"][0]
    assert section["data"]["epsilon"] == 0.2
    assert section["results"][1]["status"] == "discrepancy"


def test_structured_output_is_byte_stable(report):
    first = emit_report(report, "structured")
    again = Report.from_dict(json.loads(first))
    assert emit_report(again, "structured") == first
    assert first.endswith(b"}\n")


def test_text_rendering(report):
    text = emit_report(report, "text").decode("utf-8")
    lines = text.splitlines()
    assert lines[0] == "ccspace 0.1.0 report (schema 1)"
    assert lines[1] == f"scenario: tiny-cog sha256:{'ab' * 32}"
    assert lines[2] == "command: limits  seed: 7"
    assert "== limits ==" in lines
    assert "[pass] limits_within_2eps (full): 1 detected limits pairwise within 2ε" in lines
    assert "    witness: [e]" in lines
    assert "  epsilon: 0.200000000" in lines
    assert "  sequences: {full: {detected: {e: 4}}}" in lines
    assert "  note: weights default to 0 for: e" in lines
    assert lines[-1] == ("summary: 1 pass, 0 fail, 1 discrepancy, 0 not_applicable, "
                         "0 not_evaluated, 0 info")


def test_inline_text_nesting():
    assert inline_text([["t", "a"], [], 3, False]) == "[[t, a], [], 3, false]"


def test_unknown_format(report):
    with pytest.raises(ValueError):
        emit_report(report, "pdf")


def test_unrenderable_value():
    with pytest.raises(TypeError):
        render_structured({"x": object()})
