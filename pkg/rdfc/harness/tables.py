"""Reproduction of the two published tables with per-cell pass/fail."""
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from ..discrete import (
    BscMixtureParams,
    MixtureMapping,
    bsc_mixture,
    disambiguate_mapping,
    rate_chain,
)
from ..gaussian import GaussianLdpConfig, QuadratureSpec, corner_points, table_ratio
from .loader import ConfigLoader

logger = logging.getLogger(__name__)

DEFAULT_TABLES = Path(__file__).parent / "data" / "reference_tables.yaml"


class Table1Tolerances(BaseModel):
    wci_abs: float = Field(gt=0)
    mi_abs: float = Field(gt=0)
    mi_rel: float = Field(gt=0)
    ratio_rel: float = Field(gt=0)


class Table1Row(BaseModel):
    sigma_x: float
    epsilon: float
    delta: float
    wci: float
    mi: float
    ratio: float
    ratio_gated: bool = True


class Table1(BaseModel):
    clip_c: float = 1.0
    tolerances: Table1Tolerances
    rows: List[Table1Row]


class Table2Tolerances(BaseModel):
    entropy_abs: float = Field(gt=0)
    mi_abs: float = Field(gt=0)
    wci_abs: float = Field(gt=0)
    ratio_rel: float = Field(gt=0)


class Table2Row(BaseModel):
    params: BscMixtureParams
    wci: float
    mi: float
    ratio: float
    h_x: float
    h_y: float
    ceiling_ratio: float


class Table2(BaseModel):
    tolerances: Table2Tolerances
    rows: List[Table2Row]


class ReferenceTables(BaseModel):
    """Versioned reference values of both tables."""
    version: str
    table1: Table1
    table2: Table2

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "ReferenceTables":
        return ConfigLoader.load(path or DEFAULT_TABLES, cls)


@dataclass(frozen=True)
class CellCheck:
    """One computed value against its reference; ``passed`` is None when not gated."""
    name: str
    computed: float
    reference: float
    tolerance: str
    passed: Optional[bool]


@dataclass
class RowReport:
    index: int
    label: str
    cells: List[CellCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.cells)


@dataclass
class TableReport:
    table: str
    version: str
    rows: List[RowReport]
    runtime_s: float
    mapping: Optional[MixtureMapping] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> int:
        return sum(c.passed is False for r in self.rows for c in r.cells)


def _abs_cell(name: str, computed: float, reference: float, tol: float) -> CellCheck:
    return CellCheck(name, computed, reference, f"±{tol:g}", abs(computed - reference) <= tol)


def _rel_cell(name: str, computed: float, reference: float, rel: float, gated: bool = True) -> CellCheck:
    passed = abs(computed - reference) <= rel * abs(reference) if gated else None
    return CellCheck(name, computed, reference, f"±{rel:.0%}" if gated else "not gated", passed)


def evaluate_table1(
    tables: Optional[ReferenceTables] = None,
    quad: Optional[QuadratureSpec] = None,
    literal_pdf: bool = False,
    perturb: float = 0.0,
) -> TableReport:
    """Recompute both corner points for every Gaussian-LDP row.

    Args:
        tables: Reference data; the bundled file by default.
        quad: Quadrature settings for the mutual information.
        literal_pdf: Use the printed output density instead of the exact one.
        perturb: Offset added to every computed value (harness self-test).
    """
    tables = tables or ReferenceTables.load()
    t1 = tables.table1
    tol = t1.tolerances
    start = time.perf_counter()
    reports = []
    for index, row in enumerate(t1.rows, start=1):
        cfg = GaussianLdpConfig(sigma_x=row.sigma_x, clip_c=t1.clip_c, epsilon=row.epsilon, delta=row.delta)
        point = corner_points(cfg, quad, literal_pdf=literal_pdf)
        wci = point.wci_lower + perturb
        mi = point.mutual_info + perturb
        mi_tol = max(tol.mi_abs, tol.mi_rel * abs(row.mi))
        reports.append(RowReport(
            index=index,
            label=f"sigma_x={row.sigma_x} eps={row.epsilon} delta={row.delta}",
            cells=[
                _abs_cell("wci", wci, row.wci, tol.wci_abs),
                _abs_cell("mi", mi, row.mi, mi_tol),
                _rel_cell("ratio", table_ratio(wci, mi), row.ratio, tol.ratio_rel, gated=row.ratio_gated),
            ],
        ))
        logger.debug("table1 row %d: wci=%.6g mi=%.6g", index, wci, mi)
    return TableReport("table1", tables.version, reports, time.perf_counter() - start)


def evaluate_table2(tables: Optional[ReferenceTables] = None, perturb: float = 0.0) -> TableReport:
    """Recompute entropies, mutual information and the WCI bound for every BSC-mixture row.

    The parameter mapping is pinned down first against the reference values
    themselves.
    """
    tables = tables or ReferenceTables.load()
    t2 = tables.table2
    tol = t2.tolerances
    start = time.perf_counter()
    mapping = disambiguate_mapping([(r.params, r.mi, r.wci) for r in t2.rows])
    reports = []
    for index, row in enumerate(t2.rows, start=1):
        chain = rate_chain(bsc_mixture(row.params, mapping))
        wci = chain.wci_lower + perturb
        mi = chain.mutual_info + perturb
        h_x = chain.h_x + perturb
        h_y = chain.h_y + perturb
        reports.append(RowReport(
            index=index,
            label=str(row.params.as_tuple()),
            cells=[
                _abs_cell("wci", wci, row.wci, tol.wci_abs),
                _abs_cell("mi", mi, row.mi, tol.mi_abs),
                _rel_cell("ratio", table_ratio(wci, mi), row.ratio, tol.ratio_rel),
                _abs_cell("h_x", h_x, row.h_x, tol.entropy_abs),
                _abs_cell("h_y", h_y, row.h_y, tol.entropy_abs),
                _rel_cell("ceiling_ratio", min(h_x, h_y) / wci, row.ceiling_ratio, tol.ratio_rel),
            ],
        ))
    return TableReport("table2", tables.version, reports, time.perf_counter() - start, mapping=mapping)
