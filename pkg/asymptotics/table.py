"""
Literature parameter sets and their recomputed work factors.
"""

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import tomli

from asymptotics.optimizer import OptimizerSettings
from asymptotics.security import AlgorithmSpec, security_bits
from shared.errors import ConfigError
from shared.settings import DATA_DIR

ROWS_FILE = DATA_DIR / "literature_rows.toml"


@dataclass(frozen=True)
class TableRow:
    z: int
    q: int
    n: int
    R: float
    W: float
    claimed: int
    algorithm: str
    bits: float
    # R as printed, when it was corrected
    printed_R: Optional[float] = None

    @property
    def k(self) -> int:
        return round(self.R * self.n)

    @property
    def w(self) -> int:
        return round(self.W * self.n)

    @property
    def spec(self) -> AlgorithmSpec:
        return AlgorithmSpec.parse(self.algorithm)


@dataclass(frozen=True)
class TableEntry:
    row: TableRow
    computed: float

    @property
    def delta(self) -> float:
        return self.computed - self.row.bits


def table_rows(path: Path = ROWS_FILE) -> List[TableRow]:
    try:
        with open(path, "rb") as f:
            raw = tomli.load(f)
    except (OSError, tomli.TOMLDecodeError) as e:
        raise ConfigError(f"Cannot read parameter rows from {path}: {e}") from e
    try:
        return [TableRow(**entry) for entry in raw.get("row", [])]
    except TypeError as e:
        raise ConfigError(f"Malformed parameter row in {path}: {e}") from e


def table_report(rows: Optional[List[TableRow]] = None,
                 settings: Optional[OptimizerSettings] = None) -> List[TableEntry]:
    rows = table_rows() if rows is None else rows
    return [TableEntry(row, security_bits(row.q, row.z, row.n, row.k, row.w, row.spec, settings).bits)
            for row in rows]


def report_csv(entries: List[TableEntry]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["z", "q", "n", "R", "W", "claimed", "algorithm", "printed_bits", "computed_bits", "note"])
    for entry in entries:
        row = entry.row
        note = f"R printed as {row.printed_R}" if row.printed_R is not None else ""
        writer.writerow([row.z, row.q, row.n, f"{row.R:.2f}", f"{row.W:.2f}", row.claimed, row.algorithm,
                         f"{row.bits:g}", f"{entry.computed:.2f}", note])
    return out.getvalue()
