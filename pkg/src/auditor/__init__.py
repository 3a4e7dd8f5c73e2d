"""
Auditor module for ccspace checks.

This module provides:
- The catalog of machine-checked statements
- Per-check results, per-command sections and whole-run reports
- ScenarioAuditor (detector.py), which runs the workbench commands on a scenario
"""

from .checklist import (
    CHECK_CATALOG,
    CheckCategory,
    CheckItem,
    CheckStatus,
    get_check,
    get_checks_by_category,
    get_report_only_checks,
)
from .results import (
    SCHEMA_VERSION,
    CheckResult,
    Report,
    SectionReport,
    make_result,
)

__all__ = [
    "CHECK_CATALOG",
    "CheckCategory",
    "CheckItem",
    "CheckStatus",
    "get_check",
    "get_checks_by_category",
    "get_report_only_checks",
    "SCHEMA_VERSION",
    "CheckResult",
    "Report",
    "SectionReport",
    "make_result",
]
