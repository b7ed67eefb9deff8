"""Configuration loading, reference tables, manifests and report rendering for the CLI."""
from .loader import ConfigLoader
from .manifest import RunManifest, atomic_write, write_artifact
from .reporting import TABLE_COLUMNS, ReportRenderer, format_value, table_rows, to_csv, to_json
from .tables import ReferenceTables, TableReport, evaluate_table1, evaluate_table2
from .units import UNITS, from_nats, to_nats

__all__ = [
    "ConfigLoader",
    "RunManifest",
    "atomic_write",
    "write_artifact",
    "TABLE_COLUMNS",
    "ReportRenderer",
    "format_value",
    "table_rows",
    "to_csv",
    "to_json",
    "ReferenceTables",
    "TableReport",
    "evaluate_table1",
    "evaluate_table2",
    "UNITS",
    "from_nats",
    "to_nats",
]
