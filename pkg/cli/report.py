"""Rendering of command results as text tables and JSON documents."""
import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Sequence, Tuple

from .parser import SessionInput

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Outcome of one command: JSON-ready data plus its text rendering."""
    command: str
    data: Dict[str, object]
    text: str = ""
    sections: Dict[str, str] = field(default_factory=dict)


def format_rows(rows: Iterable[Tuple[str, object]]) -> str:
    """Two aligned columns."""
    rows = [(str(k), str(v)) for k, v in rows]
    if not rows:
        return ""
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def format_table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Right-aligned columns under a header line."""
    body = [[str(c) for c in row] for row in rows]
    widths = [max([len(h)] + [len(r[j]) for r in body]) for j, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in body]
    return "\n".join(lines)


def input_hash(session: SessionInput) -> str:
    """sha256 of the canonical session text, names and generators sorted."""
    normalized = SessionInput(
        session.field_spec,
        session.variables,
        {name: sorted(gens) for name, gens in sorted(session.ideals.items())},
        {name: sorted(rows) for name, rows in sorted(session.modules.items())},
    )
    return hashlib.sha256(normalized.to_text().encode("utf-8")).hexdigest()


def json_document(result: CommandResult, session: SessionInput) -> str:
    document = {"command": result.command, "input-hash": input_hash(session), "result": result.data}
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(result: CommandResult) -> str:
    parts = [result.text] if result.text else []
    for title, body in result.sections.items():
        parts.append(f"{title}\n{'-' * len(title)}\n{body}")
    return "\n\n".join(parts) + "\n"


def write_report(path: str, content: str):
    """
    Write a report atomically.

    Args:
        path: Destination file; parent directories are created
        content: Text to store
    """
    target = Path(path)
    if target.parent != Path("."):
        target.parent.mkdir(parents=True, exist_ok=True)
    temp_file = f"{target}.tmp"
    try:
        with open(temp_file, "w", encoding="utf-8") as f:
            f.write(content)
        os.replace(temp_file, target)
    except OSError:
        if os.path.exists(temp_file):
            os.remove(temp_file)
        raise
    logger.info("Report written to %s", target)
