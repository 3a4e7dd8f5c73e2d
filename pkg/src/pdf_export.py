"""
PDF export of check reports.

Layout:
- Letter pages, 1 inch margins
- Title block with scenario name, digest, command and seed
- One table per section: status, check id, subject, message, witness
- Section data and diagnostics as small paragraphs under each table
- Page numbers center-bottom
"""

import tempfile
from pathlib import Path
from typing import List, Optional

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.ttfonts import TTFont
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, Report, SectionReport
from src.report_format import inline_text

PAGE_WIDTH, PAGE_HEIGHT = letter
MARGIN = 1 * inch
FONT_SIZE = 9
LINE_SPACING = 11

# Unicode fonts with set-theory glyphs (∅, ⊆, τ, ε); Helvetica otherwise
FONT_CANDIDATES = [
    Path("/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf"),
    Path("/usr/share/fonts/dejavu/DejaVuSans.ttf"),
    Path("/Library/Fonts/DejaVuSans.ttf"),
]

STATUS_COLORS = {
    CheckStatus.PASS.value: colors.HexColor("#d7f0d7"),
    CheckStatus.FAIL.value: colors.HexColor("#f6d0d0"),
    CheckStatus.DISCREPANCY.value: colors.HexColor("#f8e3c0"),
    CheckStatus.NOT_APPLICABLE.value: colors.HexColor("#ececec"),
    CheckStatus.NOT_EVALUATED.value: colors.HexColor("#ececec"),
    CheckStatus.INFO.value: colors.HexColor("#dde7f6"),
}

COLUMN_WIDTHS = [0.9 * inch, 1.5 * inch, 1.1 * inch, 2.0 * inch, 1.0 * inch]


def _register_fonts() -> str:
    """Register a Unicode TrueType font if one is installed."""
    for path in FONT_CANDIDATES:
        if path.exists():
            try:
                pdfmetrics.registerFont(TTFont("ReportSans", str(path)))
                return "ReportSans"
            except Exception:
                continue
    return "Helvetica"


def _get_styles(font_name: str) -> dict:
    styles = getSampleStyleSheet()
    return {
        "title": ParagraphStyle(
            "ReportTitle", parent=styles["Normal"], fontName=font_name,
            fontSize=14, leading=18, alignment=TA_CENTER, spaceAfter=6,
        ),
        "meta": ParagraphStyle(
            "ReportMeta", parent=styles["Normal"], fontName=font_name,
            fontSize=FONT_SIZE, leading=LINE_SPACING, alignment=TA_CENTER,
        ),
        "section": ParagraphStyle(
            "SectionHeader", parent=styles["Normal"], fontName=font_name,
            fontSize=11, leading=14, alignment=TA_LEFT, spaceBefore=10, spaceAfter=4,
        ),
        "cell": ParagraphStyle(
            "Cell", parent=styles["Normal"], fontName=font_name,
            fontSize=FONT_SIZE - 1, leading=LINE_SPACING - 1,
        ),
        "note": ParagraphStyle(
            "Note", parent=styles["Normal"], fontName=font_name,
            fontSize=FONT_SIZE - 1, leading=LINE_SPACING - 1, leftIndent=0.2 * inch,
        ),
    }


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _add_page_number(canvas, doc):
    canvas.saveState()
    canvas.setFont("Helvetica", FONT_SIZE)
    canvas.drawCentredString(PAGE_WIDTH / 2, 0.5 * inch, str(canvas.getPageNumber()))
    canvas.restoreState()


def _result_row(result: CheckResult, cell: ParagraphStyle) -> list:
    witness = inline_text(result.witness) if result.witness else ""
    return [
        Paragraph(_escape(result.status), cell),
        Paragraph(_escape(result.check_id), cell),
        Paragraph(_escape(result.subject), cell),
        Paragraph(_escape(result.message), cell),
        Paragraph(_escape(witness), cell),
    ]


def _build_section(section: SectionReport, styles: dict, font_name: str) -> list:
    elements = [Paragraph(f"<b>{_escape(section.name)}</b>", styles["section"])]
    if section.results:
        header = [Paragraph(f"<b>{h}</b>", styles["cell"])
                  for h in ("status", "check", "subject", "message", "witness")]
        rows = [header] + [_result_row(r, styles["cell"]) for r in section.results]
        table = Table(rows, colWidths=COLUMN_WIDTHS, repeatRows=1)
        commands = [
            ("VALIGN", (0, 0), (-1, -1), "TOP"),
            ("GRID", (0, 0), (-1, -1), 0.25, colors.grey),
            ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#c8c8c8")),
            ("FONTNAME", (0, 0), (-1, -1), font_name),
        ]
        for row, result in enumerate(section.results, start=1):
            shade = STATUS_COLORS.get(result.status)
            if shade is not None:
                commands.append(("BACKGROUND", (0, row), (0, row), shade))
        table.setStyle(TableStyle(commands))
        elements.append(table)
    for key in sorted(section.data):
        elements.append(Paragraph(
            f"<b>{_escape(key)}</b>: {_escape(inline_text(section.data[key]))}", styles["note"]))
    for message in section.diagnostics:
        elements.append(Paragraph(f"note: {_escape(message)}", styles["note"]))
    return elements


def generate_pdf(report: Report, output_path: Optional[str] = None) -> str:
    """
    Render a report as a PDF.

    Args:
        report: Complete report
        output_path: Where to write; a temporary file when None

    Returns:
        Path to the generated PDF file.
    """
    font_name = _register_fonts()
    styles = _get_styles(font_name)

    if output_path is None:
        temp_file = tempfile.NamedTemporaryFile(suffix=".pdf", delete=False)
        output_path = temp_file.name
        temp_file.close()

    doc = SimpleDocTemplate(
        output_path,
        pagesize=letter,
        leftMargin=MARGIN,
        rightMargin=MARGIN,
        topMargin=MARGIN,
        bottomMargin=MARGIN,
        title=f"ccspace report: {report.scenario_name}",
    )

    story: List = [
        Paragraph(f"ccspace report: {_escape(report.scenario_name)}", styles["title"]),
        Paragraph(f"command {_escape(report.command)}, seed {report.seed}, "
                  f"tool {_escape(report.tool_version)}", styles["meta"]),
        Paragraph(f"sha256 {report.scenario_digest}", styles["meta"]),
        Paragraph(f"{report.passed} passed, {report.failed} failed, "
                  f"{report.discrepancies} discrepancies", styles["meta"]),
        Spacer(1, LINE_SPACING),
    ]
    for section in report.sections:
        story.extend(_build_section(section, styles, font_name))

    doc.build(story, onFirstPage=_add_page_number, onLaterPages=_add_page_number)
    return output_path
