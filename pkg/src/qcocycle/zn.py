"""Homogeneous linear systems over Z/nZ.

Smith-style elimination carried out directly over the ring Z/nZ, so entries
stay bounded by ``n``.  Zero divisors are handled by normalising each pivot
to the divisor ``gcd(pivot, n)`` and combining rows/columns with unimodular
2x2 transforms built from the extended gcd.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(s, t, d)`` with ``s*a + t*b == d == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return s0, t0, a


def unit_normaliser(a: int, n: int) -> int:
    """A unit ``u`` of Z/nZ with ``u*a == gcd(a, n) (mod n)``."""
    a %= n
    g = math.gcd(a, n)
    if a == 0:
        return 1
    m = n // g
    u0 = pow(a // g, -1, m) if m > 1 else 0
    for k in range(g):
        u = u0 + k * m
        if math.gcd(u, n) == 1:
            return u % n
    raise ArithmeticError(f"no unit normalises {a} mod {n}")  # pragma: no cover


@dataclass(frozen=True)
class Generator:
    vector: tuple[int, ...]
    order: int


@dataclass(frozen=True)
class SolutionSpace:
    """Kernel of ``A x = 0`` over Z/nZ as a direct sum of cyclic pieces.

    Every solution is ``sum(c_i * g_i)`` for a unique choice of
    ``0 <= c_i < g_i.order``.
    """

    modulus: int
    ncols: int
    generators: tuple[Generator, ...]
    pivots: tuple[int, ...]

    @property
    def count(self) -> int:
        return math.prod(g.order for g in self.generators)

    def combine(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.ncols
        for c, g in zip(coeffs, self.generators):
            if c:
                for j, v in enumerate(g.vector):
                    out[j] += c * v
        return tuple(x % self.modulus for x in out)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        ranges = [range(g.order) for g in self.generators]
        for coeffs in itertools.product(*ranges):
            yield self.combine(coeffs)


def smith_mod(rows: Sequence[Sequence[int]], ncols: int, n: int):
    """Diagonalise ``A`` over Z/nZ.

    Returns ``(diag, V)`` where ``V`` (a list of columns) is invertible mod
    ``n`` and ``U A V = diag(diag)`` for some invertible ``U`` that is not
    tracked.  Each diagonal entry is a divisor of ``n`` (``n`` itself
    standing in for zero).  Pivot choice: the entry with the smallest
    ``gcd(entry, n)``, ties broken by lowest row then lowest column.
    """
    A = [[v % n for v in row] for row in rows if any(v % n for v in row)]
    # columns of V, kept as lists for in-place column operations
    V = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    diag: list[int] = []
    t = 0
    nrows = len(A)
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            row = A[i]
            for j in range(t, ncols):
                if row[j]:
                    key = (math.gcd(row[j], n), i, j)
                    if best is None or key < best:
                        best = key
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            V[t], V[pj] = V[pj], V[t]
        _clear_cross(A, V, t, n)
        diag.append(A[t][t])
        t += 1
    diag.extend([n] * (ncols - len(diag)))
    return diag, V


def _clear_cross(A, V, t, n):
    # column ops with a gcd transform can refill column t, so alternate
    while True:
        _clear_column(A, t, n)
        _clear_row(A, V, t, n)
        if all(A[i][t] == 0 for i in range(t + 1, len(A))):
            return


def _clear_column(A, t, n):
    _scale_row(A, t, n)
    for i in range(t + 1, len(A)):
        b = A[i][t]
        if not b:
            continue
        p = A[t][t]
        if b % p == 0:
            q = b // p
            A[i] = [(x - q * y) % n for x, y in zip(A[i], A[t])]
        else:
            s, u, d = egcd(p, b)
            ra, rb = A[t], A[i]
            A[t] = [(s * x + u * y) % n for x, y in zip(ra, rb)]
            A[i] = [((-b // d) * x + (p // d) * y) % n for x, y in zip(ra, rb)]
            _scale_row(A, t, n)


def _clear_row(A, V, t, n):
    _scale_col(A, V, t, n)
    for j in range(t + 1, len(V)):
        b = A[t][j]
        if not b:
            continue
        p = A[t][t]
        if b % p == 0:
            q = b // p
            for row in A:
                row[j] = (row[j] - q * row[t]) % n
            V[j] = [(x - q * y) % n for x, y in zip(V[j], V[t])]
        else:
            s, u, d = egcd(p, b)
            for row in A:
                x, y = row[t], row[j]
                row[t] = (s * x + u * y) % n
                row[j] = ((-b // d) * x + (p // d) * y) % n
            vt, vj = V[t], V[j]
            V[t] = [(s * x + u * y) % n for x, y in zip(vt, vj)]
            V[j] = [((-b // d) * x + (p // d) * y) % n for x, y in zip(vt, vj)]
            _scale_col(A, V, t, n)


def _scale_row(A, t, n):
    u = unit_normaliser(A[t][t], n)
    if u != 1:
        A[t] = [(u * x) % n for x in A[t]]


def _scale_col(A, V, t, n):
    u = unit_normaliser(A[t][t], n)
    if u != 1:
        for row in A:
            row[t] = (u * row[t]) % n
        V[t] = [(u * x) % n for x in V[t]]


def solve_homogeneous(rows: Sequence[Sequence[int]], ncols: int, n: int) -> SolutionSpace:
    """All ``x`` in (Z/nZ)^ncols with ``A x = 0``.

    With ``A = U^-1 D V^-1`` the kernel is ``V`` applied to ``{y : d_i y_i = 0}``,
    and ``d_i y_i = 0 (mod n)`` exactly when ``y_i`` is a multiple of ``n / d_i``.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    diag, V = smith_mod(rows, ncols, n)
    gens = []
    pivots = []
    for i, d in enumerate(diag):
        d = math.gcd(d, n)
        if d == 1:
            pivots.append(i)
            continue
        step = n // d
        gens.append(Generator(tuple((step * x) % n for x in V[i]), d))
    return SolutionSpace(n, ncols, tuple(gens), tuple(pivots))


def matvec(rows: Sequence[Sequence[int]], x: Sequence[int], n: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) % n for row in rows]
