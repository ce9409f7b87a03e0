"""Key-value report documents with text, JSON, and CSV renderings.

Rendering is byte-stable: identical documents give identical output.
Exact rationals travel as ``p/q`` strings next to their double
rendering, so machine-readable output can be reparsed without loss.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["ReportDocument", "render", "FORMATS"]

FORMATS = ("text", "json", "csv")

Value = str | int | float | Fraction


@dataclass
class ReportDocument:
    """An ordered list of (key, value) pairs under an analysis name."""

    name: str
    items: list[tuple[str, Value]] = field(default_factory=list)

    def add(self, key: str, value: Value) -> None:
        self.items.append((key, value))


def _text_value(value: Value) -> str:
    if isinstance(value, Fraction):
        return f"{value} ({float(value)!r})"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_text(doc: ReportDocument) -> str:
    width = max(len(key) for key, _ in doc.items) if doc.items else 0
    lines = [f"# {doc.name}"]
    lines.extend(f"{key:<{width}} = {_text_value(value)}" for key, value in doc.items)
    return "\n".join(lines) + "\n"


def render_json(doc: ReportDocument) -> str:
    fields: dict[str, object] = {}
    for key, value in doc.items:
        if isinstance(value, Fraction):
            fields[key] = {"exact": str(value), "value": float(value)}
        else:
            fields[key] = value
    return json.dumps({"report": doc.name, "fields": fields}, indent=2) + "\n"


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "exact", "value"])
    for key, value in doc.items:
        if isinstance(value, Fraction):
            writer.writerow([key, str(value), repr(float(value))])
        elif isinstance(value, int):
            writer.writerow([key, str(value), str(value)])
        elif isinstance(value, float):
            writer.writerow([key, "", repr(value)])
        else:
            writer.writerow([key, "", value])
    return buf.getvalue()


def render(doc: ReportDocument, fmt: str) -> str:
    """Render a document as ``text``, ``json``, or ``csv``."""
    if fmt == "text":
        return render_text(doc)
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc)
    raise ValueError(f"unknown format {fmt!r}")
