"""
Check results and reports.

Handles:
- One CheckResult per evaluated statement, with witness
- SectionReport per command (results, data payload, diagnostics)
- Report for a whole run, with counts and to_dict/from_dict
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .checklist import FAILING_STATUSES, CheckStatus, get_check

SCHEMA_VERSION = "1"


@dataclass
class CheckResult:
    """Result of evaluating a single catalog item on one subject."""
    check_id: str
    category: str  # Category name as string
    status: str  # CheckStatus value as string
    message: str = ""
    witness: List[Any] = field(default_factory=list)
    subject: str = ""  # What was checked, e.g. "fhat(e)" or a sequence name

    @property
    def failed(self) -> bool:
        return self.status in {s.value for s in FAILING_STATUSES}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "check_id": self.check_id,
            "category": self.category,
            "status": self.status,
            "message": self.message,
            "witness": self.witness,
            "subject": self.subject,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        """Create from dictionary."""
        return cls(
            check_id=data["check_id"],
            category=data["category"],
            status=data["status"],
            message=data.get("message", ""),
            witness=data.get("witness", []),
            subject=data.get("subject", ""),
        )


def make_result(
    check_id: str,
    status: CheckStatus,
    message: str = "",
    witness: Optional[List[Any]] = None,
    subject: str = "",
) -> CheckResult:
    """
    Build a CheckResult for a catalog item.

    A FAIL on a report-only item is downgraded to DISCREPANCY: the finite
    instance contradicts a stated claim rather than the implementation.
    """
    item = get_check(check_id)
    if item is None:
        raise KeyError(f"unknown check id: {check_id}")
    if status is CheckStatus.FAIL and item.report_only:
        status = CheckStatus.DISCREPANCY
    return CheckResult(
        check_id=check_id,
        category=item.category.value,
        status=status.value,
        message=message,
        witness=list(witness or []),
        subject=subject,
    )


@dataclass
class SectionReport:
    """Everything one command produced."""
    name: str
    results: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    def add(self, result: CheckResult):
        self.results.append(result)

    def extend(self, results: List[CheckResult]):
        self.results.extend(results)

    def note(self, message: str):
        if message not in self.diagnostics:
            self.diagnostics.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "results": [r.to_dict() for r in self.results],
            "data": self.data,
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SectionReport":
        return cls(
            name=data["name"],
            results=[CheckResult.from_dict(r) for r in data.get("results", [])],
            data=data.get("data", {}),
            diagnostics=data.get("diagnostics", []),
        )


@dataclass
class Report:
    """Complete report for one command run on one scenario."""
    command: str
    scenario_name: str
    scenario_digest: str
    tool_version: str
    seed: int = 0
    schema_version: str = SCHEMA_VERSION
    sections: List[SectionReport] = field(default_factory=list)

    def add_section(self, section: SectionReport):
        self.sections.append(section)

    def section(self, name: str) -> Optional[SectionReport]:
        for section in self.sections:
            if section.name == name:
                return section
        return None

    @property
    def results(self) -> List[CheckResult]:
        return [r for s in self.sections for r in s.results]

    def count(self, status: CheckStatus) -> int:
        return sum(1 for r in self.results if r.status == status.value)

    @property
    def passed(self) -> int:
        return self.count(CheckStatus.PASS)

    @property
    def failed(self) -> int:
        return self.count(CheckStatus.FAIL)

    @property
    def discrepancies(self) -> int:
        return self.count(CheckStatus.DISCREPANCY)

    @property
    def has_failures(self) -> bool:
        """Any failed check or discrepancy."""
        return any(r.failed for r in self.results)

    def find(self, check_id: str, subject: Optional[str] = None) -> List[CheckResult]:
        return [
            r for r in self.results
            if r.check_id == check_id and (subject is None or r.subject == subject)
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "command": self.command,
            "scenario": {
                "name": self.scenario_name,
                "digest": self.scenario_digest,
            },
            "seed": self.seed,
            "summary": {
                "passed": self.passed,
                "failed": self.failed,
                "discrepancies": self.discrepancies,
                "not_applicable": self.count(CheckStatus.NOT_APPLICABLE),
                "not_evaluated": self.count(CheckStatus.NOT_EVALUATED),
                "info": self.count(CheckStatus.INFO),
            },
            "sections": [s.to_dict() for s in self.sections],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        """Create from dictionary."""
        scenario = data.get("scenario", {})
        return cls(
            command=data["command"],
            scenario_name=scenario.get("name", ""),
            scenario_digest=scenario.get("digest", ""),
            tool_version=data.get("tool_version", ""),
            seed=data.get("seed", 0),
            schema_version=data.get("schema_version", SCHEMA_VERSION),
            sections=[SectionReport.from_dict(s) for s in data.get("sections", [])],
        )
