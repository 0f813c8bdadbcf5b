"""Deterministic CSV / JSON / text serialization."""
from __future__ import annotations

import csv
import enum
import io
import json
import math

import numpy as np


def fmt_float(x) -> str:
    """17 significant digits, '.' decimal point, empty for missing values."""
    if x is None:
        return ""
    x = float(x)
    if not math.isfinite(x):
        return ""
    return "%.17g" % x


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    if v is None:
        return ""
    if isinstance(v, enum.Enum):
        return str(v.value)
    if isinstance(v, (tuple, list)):
        return ";".join(_cell(x) for x in v)
    return str(v)


def to_csv(rows: list[dict], columns: list[str], header_lines: list[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_json(obj, indent: int = 2) -> str:
    return _json(obj, indent, 0) + "\n"


def _json(obj, indent, depth) -> str:
    pad = " " * (indent * (depth + 1))
    end = " " * (indent * depth)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        s = fmt_float(obj)
        return s if s else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, enum.Enum):
        return json.dumps(str(obj.value))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json(v, indent, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        items = [pad + _json(v, indent, depth + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_text(rows: list[dict], columns: list[str], header_lines: list[str] = ()) -> str:
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out = [line for line in header_lines]
    out.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for row in cells:
        out.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def render_table(rows, columns, fmt: str, header_lines=(), meta: dict | None = None) -> str:
    if fmt == "csv":
        return to_csv(rows, columns, header_lines)
    if fmt == "json":
        payload = dict(meta or {})
        payload["rows"] = [{c: r.get(c) for c in columns} for r in rows]
        return to_json(payload)
    return to_text(rows, columns, header_lines)
