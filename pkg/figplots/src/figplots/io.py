"""CSV ingestion.

The upstream sweep tool writes comma separated files: `#` comment lines
(version, preset, config echo, per-point error markers), one column-name
line, then data rows. Cells are floats, booleans (true/false), or plain
strings. This module parses that layout and nothing else.
"""

from __future__ import annotations

import csv
import pathlib
from dataclasses import dataclass


class SchemaError(ValueError):
    """Input CSV is missing data or does not carry the needed columns."""


@dataclass
class Table:
    path: pathlib.Path
    comments: list[str]
    columns: list[str]
    rows: list[dict]

    def column(self, name: str) -> list:
        return [r[name] for r in self.rows]

    def distinct(self, name: str) -> list:
        # preserves first-seen order
        seen: list = []
        for r in self.rows:
            if r[name] not in seen:
                seen.append(r[name])
        return seen

    def where(self, name: str, value) -> list[dict]:
        return [r for r in self.rows if r[name] == value]


def _cell(text: str):
    t = text.strip()
    if t.lower() == "true":
        return True
    if t.lower() == "false":
        return False
    try:
        return float(t)
    except ValueError:
        return t


def read_table(path) -> Table:
    p = pathlib.Path(path)
    if not p.exists():
        raise FileNotFoundError(f"no such CSV: {p}")
    comments: list[str] = []
    columns: list[str] | None = None
    rows: list[dict] = []
    with open(p, newline="") as fh:
        for rec in csv.reader(fh):
            if not rec:
                continue
            if rec[0].lstrip().startswith("#"):
                comments.append(",".join(rec))
                continue
            if columns is None:
                columns = [c.strip() for c in rec]
                continue
            rows.append({c: _cell(v) for c, v in zip(columns, rec)})
    if columns is None or not rows:
        raise SchemaError(f"{p}: no data rows")
    return Table(path=p, comments=comments, columns=columns, rows=rows)


def require_columns(table: Table, needed) -> None:
    missing = [c for c in needed if c not in table.columns]
    if missing:
        raise SchemaError(f"{table.path}: missing column '{missing[0]}' "
                          f"(have: {', '.join(table.columns)})")
