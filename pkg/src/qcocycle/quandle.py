"""Finite quandles stored as operation tables.

Elements are the integers ``0..n-1`` and ``table[a][b]`` is ``a * b``.
Every constructor verifies the axioms before returning, so the rest of the
package can assume a :class:`FiniteQuandle` is a genuine quandle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

Table = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]


class MalformedTableError(ValueError):
    """The table is not square or holds an entry outside ``0..n-1``."""


class QuandleAxiomError(ValueError):
    def __init__(self, report: AxiomReport):
        self.report = report
        super().__init__(f"quandle axioms fail: {report.summary()}")


class ClosureError(ValueError):
    """A conjugate ``h^-1 g h`` fell outside the generating set."""

    def __init__(self, g: Perm, h: Perm, conjugate: Perm):
        self.g, self.h, self.conjugate = g, h, conjugate
        super().__init__(
            f"{format_cycles(g)} * {format_cycles(h)} = {format_cycles(conjugate)} "
            "is not in the input set"
        )


@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    idempotency: AxiomResult
    right_invertibility: AxiomResult
    self_distributivity: AxiomResult

    @property
    def ok(self) -> bool:
        return (
            self.idempotency.passed
            and self.right_invertibility.passed
            and self.self_distributivity.passed
        )

    def summary(self) -> str:
        parts = []
        for name in ("idempotency", "right_invertibility", "self_distributivity"):
            res = getattr(self, name)
            parts.append(name + ("=pass" if res.passed else f"=FAIL{res.witness}"))
        return ", ".join(parts)


def _check_shape(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0:
        raise MalformedTableError("empty table")
    for a, row in enumerate(table):
        if len(row) != n:
            raise MalformedTableError(f"row {a} has {len(row)} entries, expected {n}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTableError(f"entry ({a},{b}) = {v!r} out of range")
    return n


def verify_quandle_axioms(table: Sequence[Sequence[int]]) -> AxiomReport:
    """Full scan of the three quandle axioms.

    Each failing axiom carries the first violating tuple in lexicographic
    order: ``(a,)`` for idempotency, ``(b,)`` (the column) for right
    invertibility, ``(a, b, c)`` for self-distributivity.
    """
    n = _check_shape(table)
    idem = AxiomResult(True)
    for a in range(n):
        if table[a][a] != a:
            idem = AxiomResult(False, (a,))
            break
    inv = AxiomResult(True)
    for b in range(n):
        if len({table[a][b] for a in range(n)}) != n:
            inv = AxiomResult(False, (b,))
            break
    dist = AxiomResult(True)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
            dist = AxiomResult(False, (a, b, c))
            break
    return AxiomReport(idem, inv, dist)


@dataclass(frozen=True)
class FiniteQuandle:
    table: Table
    labels: tuple[str, ...] | None = None
    inverse_map: tuple[int, ...] | None = None
    name: str = ""
    _rinv: Table = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        report = verify_quandle_axioms(table)
        if not report.ok:
            raise QuandleAxiomError(report)
        n = len(table)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} elements")
            object.__setattr__(self, "labels", labels)
        if self.inverse_map is not None:
            inv = tuple(self.inverse_map)
            if len(inv) != n or any(inv[inv[a]] != a for a in range(n)):
                raise ValueError("inverse_map must be an involution on the elements")
            object.__setattr__(self, "inverse_map", inv)
        # rinv[x][y] is the unique z with z * y == x
        rinv = [[0] * n for _ in range(n)]
        for z in range(n):
            for y in range(n):
                rinv[table[z][y]][y] = z
        object.__setattr__(self, "_rinv", tuple(tuple(r) for r in rinv))

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def rdiv(self, a: int, b: int) -> int:
        """Right-inverse operation: the unique ``z`` with ``z * b == a``."""
        return self._rinv[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def index(self, label: str) -> int:
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        return int(label)

    def column_permutation(self, b: int) -> Perm:
        """The permutation ``a -> a * b`` as a tuple."""
        return tuple(self.table[a][b] for a in range(self.order))


def make_dihedral(p: int) -> FiniteQuandle:
    """Dihedral quandle ``R_p``: ``a * b = 2b - a mod p``."""
    if p < 2:
        raise ValueError(f"dihedral quandle needs p >= 2, got {p}")
    table = tuple(tuple((2 * b - a) % p for b in range(p)) for a in range(p))
    return FiniteQuandle(table, name=f"R{p}")


def make_trivial(n: int = 1) -> FiniteQuandle:
    return FiniteQuandle(tuple(tuple(a for _ in range(n)) for a in range(n)), name=f"T{n}")


# --- permutations, one-line notation: p[i-1] is the image of i ---------------

def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``"(1342)"`` or ``"(12)(34)"``.

    Single-digit letters may be written without separators; otherwise use
    spaces or commas inside the parentheses.
    """
    image = list(range(1, degree + 1))
    body = text.strip()
    if body in ("", "()", "e", "id"):
        return tuple(image)
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"bad cycle notation {text!r}")
    for chunk in body[1:-1].split(")("):
        chunk = chunk.strip()
        if " " in chunk or "," in chunk:
            letters = [int(t) for t in chunk.replace(",", " ").split()]
        else:
            letters = [int(ch) for ch in chunk]
        if len(set(letters)) != len(letters) or not all(1 <= x <= degree for x in letters):
            raise ValueError(f"bad cycle {chunk!r} for degree {degree}")
        for x, y in zip(letters, letters[1:] + letters[:1]):
            image[x - 1] = y
    return tuple(image)


def format_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x - 1]
        sep = "" if len(p) < 10 else " "
        out.append("(" + sep.join(str(c) for c in cyc) + ")")
    return "".join(out) or "()"


def _compose(*perms: Perm) -> Perm:
    # left-to-right product: the leftmost factor acts first
    result = tuple(range(1, len(perms[0]) + 1))
    for p in perms:
        result = tuple(p[x - 1] for x in result)
    return result


def _invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv[x - 1] = i
    return tuple(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """``h^-1 g h`` with left-to-right composition."""
    return _compose(_invert(h), g, h)


def make_conjugation_quandle(
    permutations: Sequence[Perm], name: str = ""
) -> FiniteQuandle:
    """Quandle on a set of permutations closed under ``g * h = h^-1 g h``.

    Raises :class:`ClosureError` with the first offending pair if some
    conjugate leaves the set.
    """
    perms = [tuple(p) for p in permutations]
    if not perms:
        raise ValueError("need at least one permutation")
    if len(set(perms)) != len(perms):
        raise ValueError("duplicate permutations")
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for g in perms:
        row = []
        for h in perms:
            c = conjugate(g, h)
            if c not in index:
                raise ClosureError(g, h, c)
            row.append(index[c])
        table.append(tuple(row))
    inverses = [index.get(_invert(g)) for g in perms]
    inverse_map = None
    if all(i is not None for i in inverses):
        inverse_map = tuple(inverses)
    labels = tuple(format_cycles(g) for g in perms)
    return FiniteQuandle(tuple(table), labels=labels, inverse_map=inverse_map, name=name)


# Elements 1..6 stored as 0..5; inverse pairs are 1-4, 2-5, 3-6, so element 4
# is (1432), the inverse of 1 = (1234).
Q6_CYCLES = ("(1234)", "(1423)", "(1342)", "(1432)", "(1324)", "(1243)")


def make_q6() -> FiniteQuandle:
    """The six 4-cycles of S_4 under conjugation.

    ``g * h`` is computed by relabelling the letters of the cycle ``g``
    through ``h``, which is the same permutation as ``h^-1 g h`` but does
    not go through permutation composition.
    """
    cycles = [tuple(int(ch) for ch in c.strip("()")) for c in Q6_CYCLES]

    def canon(cyc):
        i = cyc.index(1)
        return cyc[i:] + cyc[:i]

    perms = [parse_cycles(c, 4) for c in Q6_CYCLES]
    index = {canon(c): i for i, c in enumerate(cycles)}
    table = tuple(
        tuple(index[canon(tuple(h[x - 1] for x in g))] for h in perms)
        for g in cycles
    )
    inverse_map = tuple(index[canon((c[0],) + tuple(reversed(c[1:])))] for c in cycles)
    return FiniteQuandle(table, labels=Q6_CYCLES, inverse_map=inverse_map, name="Q6")


def quandle_type(X: FiniteQuandle | Sequence[Sequence[int]]) -> int | str:
    """Least ``s >= 1`` with ``x (*y)^s = x`` for all ``x, y``.

    For a finite quandle this is the lcm of the orders of the column
    permutations.  ``"unbounded"`` is returned only when some column map
    is not a permutation, which a verified quandle never has.
    """
    table = X.table if isinstance(X, FiniteQuandle) else X
    n = _check_shape(table)
    s = 1
    for y in range(n):
        col = [table[x][y] for x in range(n)]
        if len(set(col)) != n:
            return "unbounded"
        for x in range(n):
            k, z = 1, col[x]
            while z != x:
                z = col[z]
                k += 1
            s = math.lcm(s, k)
    return s


BUILTIN_QUANDLES = {
    "r3": lambda: make_dihedral(3),
    "r5": lambda: make_dihedral(5),
    "r7": lambda: make_dihedral(7),
    "q6": make_q6,
}


def builtin_quandle(name: str) -> FiniteQuandle:
    key = name.lower()
    if key in BUILTIN_QUANDLES:
        return BUILTIN_QUANDLES[key]()
    if key.startswith("r") and key[1:].isdigit():
        return make_dihedral(int(key[1:]))
    raise KeyError(f"unknown builtin quandle {name!r}")
