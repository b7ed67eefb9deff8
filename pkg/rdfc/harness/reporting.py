"""CSV, JSON and markdown rendering of command results."""
import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

from jinja2 import Environment, FileSystemLoader

from .tables import TableReport

SIG_DIGITS = 10


def format_value(value: Any) -> Any:
    """Numbers to 10 significant digits; everything else unchanged."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return f"{value:.{SIG_DIGITS}g}"
    return value


def to_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    """CSV text with a header row, even when there are no rows."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: format_value(row.get(k)) for k in columns})
    return buf.getvalue()


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def to_json(rows: Iterable[Dict[str, Any]], **meta: Any) -> str:
    payload = dict(meta)
    payload["rows"] = [{k: _json_safe(v) for k, v in row.items()} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def table_rows(report: TableReport) -> List[Dict[str, Any]]:
    """Flatten a table report into one record per cell."""
    return [
        {
            "row": r.index,
            "cell": c.name,
            "computed": c.computed,
            "reference": c.reference,
            "tolerance": c.tolerance,
            "passed": c.passed,
        }
        for r in report.rows
        for c in r.cells
    ]


TABLE_COLUMNS = ["row", "cell", "computed", "reference", "tolerance", "passed"]


class ReportRenderer:
    """Renders markdown reproduction reports from Jinja2 templates."""

    def __init__(self, template_dir: Path = Path(__file__).parent / "templates"):
        self.jinja_env = Environment(
            loader=FileSystemLoader(template_dir),
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.jinja_env.filters["num"] = lambda v: f"{v:.6g}"

    def render(self, report: TableReport) -> str:
        template = self.jinja_env.get_template("table_report.md.j2")
        return template.render(report=report, cells=[c.name for c in report.rows[0].cells] if report.rows else [])
