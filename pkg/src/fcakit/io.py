"""Reading and writing formal contexts: Burmeister .cxt, CSV, and JSON."""
from __future__ import annotations

import csv
import io as _io
import json

from .context import FormalContext
from .errors import NamingError, ParseError

FORMATS = ("cxt", "csv", "json")

_EXTENSIONS = {".cxt": "cxt", ".csv": "csv", ".json": "json"}


def format_for_path(path: str) -> str:
    """Pick a context format from a file extension."""
    for ext, fmt in _EXTENSIONS.items():
        if path.lower().endswith(ext):
            return fmt
    raise ParseError(f"cannot infer context format from path {path!r} (expected .cxt/.csv/.json)")


def read_context(data: str | bytes, fmt: str) -> FormalContext:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if fmt == "cxt":
        return parse_cxt(data)
    if fmt == "csv":
        return parse_csv(data)
    if fmt == "json":
        return parse_json(data)
    raise ParseError(f"unknown context format {fmt!r}")


def write_context(ctx: FormalContext, fmt: str) -> str:
    if fmt == "cxt":
        return render_cxt(ctx)
    if fmt == "csv":
        return render_csv(ctx)
    if fmt == "json":
        return render_json(ctx)
    raise ParseError(f"unknown context format {fmt!r}")


def load_context(path: str) -> FormalContext:
    with open(path, "r", encoding="utf-8") as fh:
        return read_context(fh.read(), format_for_path(path))


# -- Burmeister .cxt ------------------------------------------------------------


def parse_cxt(text: str) -> FormalContext:
    lines = [line.rstrip("\r") for line in text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline is optional

    def need(i: int) -> str:
        if i >= len(lines):
            raise ParseError("unexpected end of file", line=len(lines) + 1)
        return lines[i]

    if need(0).strip() != "B":
        raise ParseError(f"expected 'B' header, got {lines[0]!r}", line=1)
    if need(1).strip():
        raise ParseError("expected an empty line", line=2)

    def count(i: int, what: str) -> int:
        raw = need(i).strip()
        if not raw.isdigit():
            raise ParseError(f"expected {what} count, got {raw!r}", line=i + 1)
        return int(raw)

    n_objects = count(2, "object")
    n_attrs = count(3, "attribute")
    if need(4).strip():
        raise ParseError("expected an empty line", line=5)

    pos = 5
    names = []
    seen_objects: set[str] = set()
    seen_attrs: set[str] = set()
    for k in range(n_objects + n_attrs):
        name = need(pos + k).strip()
        kind, seen = ("object", seen_objects) if k < n_objects else ("attribute", seen_attrs)
        if not name:
            raise ParseError(f"empty {kind} name", line=pos + k + 1)
        if name in seen:
            raise ParseError(f"duplicate {kind} name {name!r}", line=pos + k + 1)
        seen.add(name)
        names.append(name)
    objects, attributes = names[:n_objects], names[n_objects:]
    pos += n_objects + n_attrs

    rows = []
    for k in range(n_objects):
        raw = need(pos + k)
        if len(raw) != n_attrs:
            raise ParseError(
                f"incidence row has {len(raw)} cells, expected {n_attrs}", line=pos + k + 1
            )
        bits = 0
        for m, ch in enumerate(raw):
            if ch == "X":
                bits |= 1 << m
            elif ch != ".":
                raise ParseError(f"bad incidence character {ch!r}", line=pos + k + 1)
        rows.append(bits)
    if len(lines) > pos + n_objects and any(s.strip() for s in lines[pos + n_objects :]):
        raise ParseError("trailing content after incidence rows", line=pos + n_objects + 1)
    try:
        return FormalContext(objects, attributes, rows)
    except NamingError as exc:
        raise ParseError(str(exc)) from exc


def _cross_row(bits: int, width: int) -> str:
    return "".join("X" if bits >> m & 1 else "." for m in range(width))


def render_cxt(ctx: FormalContext) -> str:
    parts = ["B", "", str(ctx.object_count), str(ctx.attribute_count), ""]
    parts += list(ctx.objects)
    parts += list(ctx.attributes)
    parts += [_cross_row(bits, ctx.attribute_count) for bits in ctx.rows]
    return "\n".join(parts) + "\n"


# -- CSV ---------------------------------------------------------------------


def parse_csv(text: str) -> FormalContext:
    reader = csv.reader(_io.StringIO(text))
    table = [row for row in reader]
    while len(table) > 1 and not any(cell.strip() for cell in table[-1]):
        table.pop()  # trailing blank lines, but never the header row
    if not table:
        raise ParseError("empty CSV", line=1)
    header = table[0]
    if header and header[0].strip():
        raise ParseError("first header cell must be empty", line=1)
    attributes = [cell for cell in header[1:]]
    if len({a.strip() for a in attributes}) != len(attributes):
        raise ParseError("duplicate attribute name", line=1)
    objects, rows = [], []
    seen = set()
    for k, row in enumerate(table[1:], start=2):
        if len(row) != len(attributes) + 1:
            raise ParseError(
                f"row has {len(row)} cells, expected {len(attributes) + 1}", line=k
            )
        if row[0].strip() in seen:
            raise ParseError(f"duplicate object name {row[0].strip()!r}", line=k)
        seen.add(row[0].strip())
        objects.append(row[0])
        bits = 0
        for m, cell in enumerate(row[1:]):
            cell = cell.strip()
            if cell in ("1", "X"):
                bits |= 1 << m
            elif cell not in ("0", ""):
                raise ParseError(f"bad cell {cell!r} (want 1/0 or X/empty)", line=k)
        rows.append(bits)
    try:
        return FormalContext(objects, attributes, rows)
    except NamingError as exc:
        raise ParseError(str(exc)) from exc


def render_csv(ctx: FormalContext) -> str:
    out = _io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(ctx.attributes))
    for g, bits in enumerate(ctx.rows):
        writer.writerow([ctx.objects[g]] + ["1" if bits >> m & 1 else "0" for m in range(ctx.attribute_count)])
    return out.getvalue()


# -- JSON --------------------------------------------------------------------


def parse_json(text: str) -> FormalContext:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    return context_from_json(data)


def context_from_json(data) -> FormalContext:
    if not isinstance(data, dict):
        raise ParseError("context JSON must be an object")
    for key in ("objects", "attributes", "rows"):
        if key not in data:
            raise ParseError(f"context JSON missing {key!r}")
    objects, attributes, crosses = data["objects"], data["attributes"], data["rows"]
    if len(crosses) != len(objects):
        raise ParseError(f"{len(objects)} objects but {len(crosses)} rows")
    rows = []
    for k, raw in enumerate(crosses):
        if not isinstance(raw, str) or len(raw) != len(attributes):
            raise ParseError(f"row {k} must be a {len(attributes)}-character X/. string")
        bits = 0
        for m, ch in enumerate(raw):
            if ch == "X":
                bits |= 1 << m
            elif ch != ".":
                raise ParseError(f"bad incidence character {ch!r} in row {k}")
        rows.append(bits)
    try:
        return FormalContext(objects, attributes, rows)
    except NamingError as exc:
        raise ParseError(str(exc)) from exc


def context_to_json(ctx: FormalContext) -> dict:
    return {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "rows": [_cross_row(bits, ctx.attribute_count) for bits in ctx.rows],
    }


def render_json(ctx: FormalContext) -> str:
    return json.dumps(context_to_json(ctx), indent=2) + "\n"
