"""
CSV and JSON emission.

CSV: one ``#`` metadata line, a header row, then data; floats are written
with 17 significant digits, missing values as empty fields, LF endings.
JSON: a single object with a ``metadata`` member and one member per table.
"""

import json
import math
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, TextIO

import pandas as pd

from ..__version__ import __version__


@dataclass
class Table:
    name: str
    columns: Sequence[str]
    records: List[Dict[str, Any]]
    notes: List[str] = field(default_factory=list)


@dataclass
class CommandOutput:
    command: str
    tables: List[Table]
    metadata: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0


def _meta_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def metadata_line(output: CommandOutput, table: Table) -> str:
    parts = [f"aptgame {__version__}", f"command={output.command}", f"table={table.name}"]
    parts.extend(f"{k}={_meta_value(v)}" for k, v in output.metadata.items())
    parts.extend(table.notes)
    return "# " + " ".join(parts).replace("\n", " ")


def write_csv(output: CommandOutput, table: Table, stream: TextIO) -> None:
    stream.write(metadata_line(output, table) + "\n")
    frame = pd.DataFrame.from_records(table.records, columns=list(table.columns))
    frame.to_csv(stream, index=False, float_format="%.17g", na_rep="", lineterminator="\n")


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def to_json(output: CommandOutput) -> str:
    doc: Dict[str, Any] = {
        "metadata": {"version": __version__, "command": output.command, **output.metadata},
    }
    for table in output.tables:
        doc[table.name] = [
            {c: _json_safe(r.get(c)) for c in table.columns} for r in table.records
        ]
        if table.notes:
            doc.setdefault("notes", {})[table.name] = list(table.notes)
    return json.dumps(doc, indent=2) + "\n"


def _sibling_path(path: str, table: Table, first: bool) -> str:
    if first:
        return path
    stem, ext = os.path.splitext(path)
    return f"{stem}-{table.name}{ext or '.csv'}"


def emit(output: CommandOutput, fmt: str, stream: TextIO, out: Optional[str] = None,
         out_is_dir: bool = False) -> List[str]:
    """Write ``output`` to ``stream`` or to files; returns the written paths."""
    written: List[str] = []
    if out is None:
        if fmt == "json":
            stream.write(to_json(output))
            return written
        for i, table in enumerate(output.tables):
            if i:
                stream.write("\n")
            write_csv(output, table, stream)
        return written

    if out_is_dir:
        os.makedirs(out, exist_ok=True)
        if fmt == "json":
            path = os.path.join(out, f"{output.command.replace(' ', '-')}.json")
            _write_text(path, to_json(output))
            return [path]
        for table in output.tables:
            path = os.path.join(out, f"{table.name}.csv")
            with open(path, "w", encoding="utf-8", newline="") as f:
                write_csv(output, table, f)
            written.append(path)
        return written

    if fmt == "json":
        _write_text(out, to_json(output))
        return [out]
    for i, table in enumerate(output.tables):
        path = _sibling_path(out, table, first=(i == 0))
        with open(path, "w", encoding="utf-8", newline="") as f:
            write_csv(output, table, f)
        written.append(path)
    return written


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
