"""Text formats for quandles and cocycles.

Quandle file::

    3
    0 2 1
    2 1 0
    1 0 2

optionally with ``# label`` after each row.  Cocycle file::

    cocycle2 6 4
    0 3 1
    ...

listing only the non-zero entries, in lexicographic order.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from .cocycle import Cocycle2, Cocycle3, Coefficients, DimensionError
from .quandle import FiniteQuandle


class FormatError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def dumps_quandle(X: FiniteQuandle) -> str:
    lines = [str(X.order)]
    for a, row in enumerate(X.table):
        line = " ".join(map(str, row))
        if X.labels is not None:
            line += f" # {X.labels[a]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_quandle_text(text: str):
    """Table and labels from a quandle file, without checking the axioms."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FormatError(f"expected the order, got {lines[0]!r}", 1) from None
    if n < 1:
        raise FormatError("order must be positive", 1)
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", len(lines))
    table, labels = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        body, hash_, label = line.partition(" # ")
        if not hash_ and "#" in line:
            raise FormatError("labels are written as ' # label'", lineno)
        try:
            row = [int(t) for t in body.split()]
        except ValueError:
            raise FormatError(f"non-integer entry in {body!r}", lineno) from None
        table.append(tuple(row))
        labels.append(label if hash_ else None)
    if any(lab is None for lab in labels) and any(lab is not None for lab in labels):
        raise FormatError("either every row carries a label or none does", 2)
    return tuple(table), (None if labels[0] is None else tuple(labels))


def loads_quandle(text: str, name: str = "") -> FiniteQuandle:
    table, labels = parse_quandle_text(text)
    return FiniteQuandle(table, labels=labels, name=name)


def read_quandle(path: str | Path) -> FiniteQuandle:
    p = Path(path)
    return loads_quandle(p.read_text(), name=p.stem)


def write_quandle(X: FiniteQuandle, path: str | Path) -> None:
    Path(path).write_text(dumps_quandle(X))


def dumps_cocycle(c: Cocycle2 | Cocycle3) -> str:
    kind = "cocycle2" if isinstance(c, Cocycle2) else "cocycle3"
    deg = 2 if kind == "cocycle2" else 3
    m = c.quandle.order
    lines = [f"{kind} {m} {c.modulus}"]
    for idx in itertools.product(range(m), repeat=deg):
        v = c(*idx)
        if v:
            lines.append(" ".join(map(str, idx)) + f" {v}")
    return "\n".join(lines) + "\n"


def loads_cocycle(text: str, X: FiniteQuandle) -> Cocycle2 | Cocycle3:
    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise FormatError("empty file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("cocycle2", "cocycle3"):
        raise FormatError("header must be 'cocycle2|cocycle3 <order> <modulus>'", 1)
    kind, m, n = head[0], int(head[1]), int(head[2])
    if m != X.order:
        raise DimensionError(f"cocycle is for order {m}, quandle has order {X.order}")
    deg = 2 if kind == "cocycle2" else 3
    values: dict[tuple[int, ...], int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise FormatError(f"non-integer entry in {line!r}", lineno) from None
        if len(nums) != deg + 1:
            raise FormatError(f"expected {deg} indices and a value", lineno)
        idx, v = tuple(nums[:-1]), nums[-1]
        if not all(0 <= i < m for i in idx):
            raise FormatError(f"index out of range in {line!r}", lineno)
        if idx in values:
            raise FormatError(f"duplicate entry {idx}", lineno)
        values[idx] = v
    coeff = Coefficients(n)
    if deg == 2:
        table = tuple(tuple(values.get((a, b), 0) for b in range(m)) for a in range(m))
        return Cocycle2(X, coeff, table)
    table = tuple(
        tuple(tuple(values.get((a, b, c), 0) for c in range(m)) for b in range(m))
        for a in range(m)
    )
    return Cocycle3(X, coeff, table)


def read_cocycle(path: str | Path, X: FiniteQuandle) -> Cocycle2 | Cocycle3:
    return loads_cocycle(Path(path).read_text(), X)


def write_cocycle(c: Cocycle2 | Cocycle3, path: str | Path) -> None:
    Path(path).write_text(dumps_cocycle(c))
