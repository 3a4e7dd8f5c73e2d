"""
Command runner behind the ccspace entry point.

Exit codes:
- 0: report emitted
- 1: scenario parse/integrity failure or a library precondition error
- 2: a check failed or a discrepancy was reported, under --strict
- 3: the scenario could not be read or the report could not be written
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Optional, Tuple, Union

from src.auditor.detector import ScenarioAuditor
from src.auditor.results import Report
from src.errors import CcspaceError, ReportWriteError
from src.report_format import emit_report
from src.scenario import build_context, scenario_settings
from src.storage import load_scenario, save_report, scenario_digest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SCENARIO = 1
EXIT_FAILURES = 2
EXIT_IO = 3


@dataclass(frozen=True)
class RunFlags:
    """Command-line flags that shape a run."""
    format: str = "text"  # text, structured or pdf
    strict: bool = False
    seed: Optional[int] = None
    epsilon: Optional[float] = None
    cap: Optional[int] = None  # enumeration cap
    output: Optional[str] = None


def run(
    command: str,
    scenario_path: Union[str, Path],
    flags: RunFlags = RunFlags(),
    stream: Optional[BinaryIO] = None,
) -> Tuple[Optional[Report], int]:
    """
    Load a scenario, run a command and emit the report.

    The report goes to --output when given, otherwise to stream (stdout).

    Returns:
        (report, exit code); report is None when the run stopped early.
    """
    try:
        scenario = load_scenario(scenario_path)
    except CcspaceError as e:
        logger.error("%s", e)
        return None, EXIT_SCENARIO
    except OSError as e:
        logger.error("cannot read scenario: %s", e)
        return None, EXIT_IO

    settings = scenario_settings(scenario, seed=flags.seed, epsilon=flags.epsilon,
                                 enumeration_cap=flags.cap)
    try:
        context = build_context(scenario, settings)
        report = ScenarioAuditor(context, scenario_digest(scenario)).run(command)
    except CcspaceError as e:
        logger.error("%s", e)
        return None, EXIT_SCENARIO

    try:
        if flags.output:
            save_report(report, flags.output, flags.format)
        elif flags.format == "pdf":
            raise ReportWriteError("pdf reports need --output")
        else:
            out = stream if stream is not None else sys.stdout.buffer
            out.write(emit_report(report, flags.format))
            out.flush()
    except (OSError, ReportWriteError) as e:
        logger.error("%s", e)
        return report, EXIT_IO

    if flags.strict and report.has_failures:
        logger.warning("%d failed, %d discrepancies (strict)", report.failed, report.discrepancies)
        return report, EXIT_FAILURES
    return report, EXIT_OK
