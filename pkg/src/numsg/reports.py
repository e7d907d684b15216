"""Rendering of tabular reports to CSV and JSON.

CSV: comma separated, header row, LF endings. Sets of integers are written
as space separated values inside double quotes ("0 2"). Summary fields
follow the data as ``# key,value`` lines.

JSON: one object per report with a ``schema`` field, the summary fields at
top level and the data under ``rows``. Exact rationals become "p/q".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1


@dataclass
class Report:
    name: str
    columns: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    ok: bool | None = None

    @property
    def schema(self) -> str:
        return f"numsg.{self.name}/{SCHEMA_VERSION}"

    def add(self, *cells):
        if len(cells) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} cells, got {len(cells)}")
        self.rows.append(list(cells))


class IntSet(tuple):
    """Marks a tuple of ints to be rendered as a set."""


def _json_value(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (tuple, list, set, frozenset)):
        return [_json_value(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    return v


def to_json(report: Report) -> str:
    doc: dict[str, Any] = {"schema": report.schema}
    for k, v in report.summary.items():
        doc[k] = _json_value(v)
    if report.columns:
        doc["rows"] = [
            {c: _json_value(v) for c, v in zip(report.columns, row)} for row in report.rows
        ]
    if report.ok is not None:
        doc["ok"] = report.ok
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (IntSet, set, frozenset)):
        return '"' + " ".join(str(x) for x in sorted(v)) + '"'
    if isinstance(v, (tuple, list)):
        return '"' + " ".join(str(x) for x in v) + '"'
    if isinstance(v, float):
        return repr(v)
    s = str(v)
    if any(ch in s for ch in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def to_csv(report: Report) -> str:
    lines = []
    if report.columns:
        lines.append(",".join(report.columns))
        lines.extend(",".join(_csv_cell(v) for v in row) for row in report.rows)
        lines.extend(f"# {k},{_csv_cell(v)}" for k, v in report.summary.items())
        if report.ok is not None:
            lines.append(f"# ok,{_csv_cell(report.ok)}")
    else:
        # scalar report: one header row and one value row
        keys = list(report.summary)
        values = [report.summary[k] for k in keys]
        if report.ok is not None:
            keys.append("ok")
            values.append(report.ok)
        lines.append(",".join(keys))
        lines.append(",".join(_csv_cell(v) for v in values))
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")
