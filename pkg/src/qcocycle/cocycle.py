"""Quandle 2- and 3-cocycles with coefficients in Z/nZ."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .quandle import FiniteQuandle, make_dihedral, make_q6
from .zn import SolutionSpace, solve_homogeneous


class DimensionError(ValueError):
    pass


class CapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        self.count, self.cap = count, cap
        super().__init__(f"{count} solutions exceed the cap of {cap}")


class CocycleError(ValueError):
    def __init__(self, report: CocycleReport):
        self.report = report
        super().__init__(str(report))


@dataclass(frozen=True)
class Coefficients:
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def reduce(self, v: int) -> int:
        return v % self.modulus


@dataclass(frozen=True)
class CocycleReport:
    degenerate_ok: bool
    identity_ok: bool
    degenerate_witness: tuple[int, ...] | None = None
    # (tuple, lhs, rhs) for the first failing instance of the identity
    identity_witness: tuple[tuple[int, ...], int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.degenerate_ok and self.identity_ok

    def __str__(self) -> str:
        if self.ok:
            return "cocycle: pass"
        parts = []
        if not self.degenerate_ok:
            parts.append(f"degeneracy fails at {self.degenerate_witness}")
        if not self.identity_ok:
            t, lhs, rhs = self.identity_witness
            parts.append(f"cocycle identity fails at {t}: {lhs} != {rhs}")
        return "; ".join(parts)


def _nest(values, dims):
    return tuple(tuple(v % dims for v in row) for row in values)


@dataclass(frozen=True)
class Cocycle2:
    """A map ``X x X -> Z/nZ`` stored as an m-by-m table.

    Construction checks dimensions and reduces entries; it does not verify
    the cocycle conditions (see :func:`verify_2cocycle`).
    """

    quandle: FiniteQuandle
    coeff: Coefficients
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.quandle.order
        if len(self.table) != m or any(len(r) != m for r in self.table):
            raise DimensionError(f"2-cocycle table must be {m}x{m}")
        object.__setattr__(self, "table", _nest(self.table, self.coeff.modulus))

    @property
    def modulus(self) -> int:
        return self.coeff.modulus

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    @classmethod
    def zero(cls, X: FiniteQuandle, modulus: int) -> Cocycle2:
        m = X.order
        return cls(X, Coefficients(modulus), tuple((0,) * m for _ in range(m)))


@dataclass(frozen=True)
class Cocycle3:
    quandle: FiniteQuandle
    coeff: Coefficients
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        m = self.quandle.order
        t = self.table
        if len(t) != m or any(len(s) != m or any(len(r) != m for r in s) for s in t):
            raise DimensionError(f"3-cocycle table must be {m}x{m}x{m}")
        n = self.coeff.modulus
        object.__setattr__(self, "table", tuple(_nest(s, n) for s in t))

    @property
    def modulus(self) -> int:
        return self.coeff.modulus

    def __call__(self, a: int, b: int, c: int) -> int:
        return self.table[a][b][c]

    @classmethod
    def zero(cls, X: FiniteQuandle, modulus: int) -> Cocycle3:
        m = X.order
        z = tuple(tuple((0,) * m for _ in range(m)) for _ in range(m))
        return cls(X, Coefficients(modulus), z)


def verify_2cocycle(c: Cocycle2) -> CocycleReport:
    """Scan ``phi(x,x) = 0`` and, over all triples,
    ``phi(x1,x3) - phi(x1,x2) = phi(x1*x2, x3) - phi(x1*x3, x2*x3)``.
    """
    X, phi, n = c.quandle, c.table, c.modulus
    m = X.order
    if len(phi) != m:
        raise DimensionError("table does not match quandle order")
    deg = None
    for x in range(m):
        if phi[x][x] % n:
            deg = (x,)
            break
    ident = None
    op = X.table
    for x1, x2, x3 in itertools.product(range(m), repeat=3):
        lhs = (phi[x1][x3] - phi[x1][x2]) % n
        rhs = (phi[op[x1][x2]][x3] - phi[op[x1][x3]][op[x2][x3]]) % n
        if lhs != rhs:
            ident = ((x1, x2, x3), lhs, rhs)
            break
    return CocycleReport(deg is None, ident is None, deg, ident)


def verify_3cocycle(c: Cocycle3) -> CocycleReport:
    """Scan degeneracy (``x1 = x2`` or ``x2 = x3``) and the quadruple identity

    theta(x1,x3,x4) - theta(x1,x2,x4) + theta(x1,x2,x3)
      = theta(x1*x2,x3,x4) - theta(x1*x3,x2*x3,x4) + theta(x1*x4,x2*x4,x3*x4)
    """
    X, th, n = c.quandle, c.table, c.modulus
    m = X.order
    if len(th) != m:
        raise DimensionError("table does not match quandle order")
    op = X.table
    deg = None
    for x1, x2, x3 in itertools.product(range(m), repeat=3):
        if (x1 == x2 or x2 == x3) and th[x1][x2][x3] % n:
            deg = (x1, x2, x3)
            break
    ident = None
    for x1, x2, x3, x4 in itertools.product(range(m), repeat=4):
        lhs = (th[x1][x3][x4] - th[x1][x2][x4] + th[x1][x2][x3]) % n
        rhs = (
            th[op[x1][x2]][x3][x4]
            - th[op[x1][x3]][op[x2][x3]][x4]
            + th[op[x1][x4]][op[x2][x4]][op[x3][x4]]
        ) % n
        if lhs != rhs:
            ident = ((x1, x2, x3, x4), lhs, rhs)
            break
    return CocycleReport(deg is None, ident is None, deg, ident)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def mochizuki_value(p: int, x1: int, x2: int, x3: int) -> int:
    """``(x1-x2) * ((2x3-x2)^p + x2^p - 2 x3^p) / p`` reduced mod p.

    The division is exact on integers; it is asserted, not assumed.
    """
    bracket = (2 * x3 - x2) ** p + x2**p - 2 * x3**p
    q, r = divmod(bracket, p)
    assert r == 0, f"bracket {bracket} not divisible by {p}"
    return ((x1 - x2) * q) % p


def mochizuki_cocycle(p: int) -> Cocycle3:
    """Mochizuki's 3-cocycle of the dihedral quandle R_p with Z_p coefficients."""
    if p % 2 == 0 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    X = make_dihedral(p)
    table = tuple(
        tuple(tuple(mochizuki_value(p, a, b, c) for c in range(p)) for b in range(p))
        for a in range(p)
    )
    return Cocycle3(X, Coefficients(p), table)


# 1-based element numbering, inverse pairs 1-4, 2-5, 3-6.
_Q6Z4_ENTRIES = {
    1: [(1, 3), (2, 1), (2, 3), (3, 1), (3, 5), (5, 1), (5, 6), (6, 1), (6, 2), (6, 5)],
    2: [(1, 5), (5, 3)],
    3: [(1, 6), (3, 2)],
}


def q6_appendix_cocycle() -> Cocycle2:
    """The explicit Z_4-valued 2-cocycle on Q6.

    ``phi(a,a) = 0``, ``phi(a, a^-1) = 1``, and the listed off-edge values;
    zero elsewhere.
    """
    X = make_q6()
    table = [[0] * 6 for _ in range(6)]
    for a in range(6):
        table[a][X.inverse_map[a]] = 1
    for value, pairs in _Q6Z4_ENTRIES.items():
        for a, b in pairs:
            table[a - 1][b - 1] = value
    return Cocycle2(X, Coefficients(4), tuple(map(tuple, table)))


def two_cocycle_system(X: FiniteQuandle, modulus: int):
    """Linear system whose kernel is Z^2(X; Z_n).

    Unknowns are the off-diagonal entries in row-major order (the diagonal
    is fixed to zero).  One row per triple ``(x1, x2, x3)``.
    """
    m = X.order
    unknowns = [(a, b) for a in range(m) for b in range(m) if a != b]
    col = {ab: j for j, ab in enumerate(unknowns)}
    rows = []
    op = X.table
    for x1, x2, x3 in itertools.product(range(m), repeat=3):
        row = [0] * len(unknowns)
        # phi(x1,x3) - phi(x1,x2) - phi(x1*x2,x3) + phi(x1*x3,x2*x3) = 0
        for sign, ab in (
            (1, (x1, x3)),
            (-1, (x1, x2)),
            (-1, (op[x1][x2], x3)),
            (1, (op[x1][x3], op[x2][x3])),
        ):
            j = col.get(ab)
            if j is not None:
                row[j] += sign
        if any(v % modulus for v in row):
            rows.append(row)
    return rows, unknowns


@dataclass(frozen=True)
class TwoCocycleSpace:
    quandle: FiniteQuandle
    coeff: Coefficients
    unknowns: tuple[tuple[int, int], ...]
    solutions: SolutionSpace

    @property
    def count(self) -> int:
        return self.solutions.count

    def to_cocycle(self, vector) -> Cocycle2:
        m = self.quandle.order
        table = [[0] * m for _ in range(m)]
        for (a, b), v in zip(self.unknowns, vector):
            table[a][b] = v
        return Cocycle2(self.quandle, self.coeff, tuple(map(tuple, table)))

    def generators(self) -> list[tuple[Cocycle2, int]]:
        return [(self.to_cocycle(g.vector), g.order) for g in self.solutions.generators]

    def iter_cocycles(self, cap: int = 10_000) -> Iterator[Cocycle2]:
        if self.count > cap:
            raise CapExceeded(self.count, cap)
        for vec in self.solutions:
            yield self.to_cocycle(vec)


def enumerate_2cocycles(
    X: FiniteQuandle, coeff: Coefficients | int, max_order: int = 24
) -> TwoCocycleSpace:
    """Solve the 2-cocycle conditions on ``X`` as a linear system over Z_n.

    The returned space gives generators with their additive orders and can
    iterate over every cocycle when the total count is within a cap.
    """
    if isinstance(coeff, int):
        coeff = Coefficients(coeff)
    if X.order > max_order:
        raise ValueError(f"quandle order {X.order} exceeds max_order={max_order}")
    rows, unknowns = two_cocycle_system(X, coeff.modulus)
    sols = solve_homogeneous(rows, len(unknowns), coeff.modulus)
    if sols.count < 1:  # pragma: no cover - the zero cocycle always solves
        raise AssertionError("empty solution set: solver bug")
    return TwoCocycleSpace(X, coeff, tuple(unknowns), sols)
