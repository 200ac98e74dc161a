"""Reading and writing the ``.sgt`` table text format.

::

    # comments start with '#'
    name: M
    4
    0 2 2 2
    3 1 2 3
    2 2 2 2
    3 2 2 2

The ``name:`` header and comments may appear anywhere before the order line.
:func:`format_sgt` emits the canonical layout (optional name line, order,
rows joined by single spaces, trailing newline), which :func:`parse_sgt`
reads back to an equal table.
"""

from __future__ import annotations

import os

from .cayley import CayleyTable, validate
from .errors import SgtParseError


def parse_sgt(text: str) -> CayleyTable:
    name = None
    order = None
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if order is None and stripped.startswith("name:"):
            name = stripped[len("name:"):].strip()
            continue
        col = 1 + len(line) - len(line.lstrip())
        if order is None:
            try:
                order = int(stripped)
            except ValueError:
                raise SgtParseError(f"expected the table order, got {stripped!r}", lineno, col) from None
            if order < 1:
                raise SgtParseError("table order must be positive", lineno, col)
            continue
        if len(rows) == order:
            raise SgtParseError("more rows than the declared order", lineno, col)
        row = []
        pos = 0
        for tok in line.split():
            pos = line.index(tok, pos)
            try:
                row.append(int(tok))
            except ValueError:
                raise SgtParseError(f"not an integer: {tok!r}", lineno, pos + 1) from None
            pos += len(tok)
        if len(row) != order:
            raise SgtParseError(f"expected {order} entries, got {len(row)}", lineno, col)
        rows.append(row)
    if order is None:
        raise SgtParseError("missing table order", 1)
    if len(rows) != order:
        raise SgtParseError(f"expected {order} rows, got {len(rows)}", len(text.splitlines()) + 1)
    return validate(order, rows, name)


def format_sgt(table: CayleyTable) -> str:
    lines = []
    if table.name is not None:
        lines.append(f"name: {table.name}")
    lines.append(str(table.order))
    lines.extend(" ".join(map(str, row)) for row in table.products)
    return "\n".join(lines) + "\n"


def read_sgt(path: str | os.PathLike) -> CayleyTable:
    with open(path, encoding="utf-8") as fh:
        table = parse_sgt(fh.read())
    return table


def write_sgt(table: CayleyTable, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_sgt(table))
