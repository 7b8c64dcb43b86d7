"""Knots as braid closures and their quandle colorings.

Crossing convention.  Strand colours are read top to bottom.  A positive
letter ``s_i`` sends the colours ``(a, b)`` on strands ``i, i+1`` to
``(b, a*b)``: the strand coloured ``b`` passes over and the under-strand is
acted on.  A negative letter sends ``(a, b)`` to ``(b /a, a)`` where ``/`` is
the right inverse of ``*``.  At every crossing the colour pair ``(u, o)``
records the under-arc ``u`` with ``u * o`` equal to the other under-arc and
``o`` the over-arc colour; this is the pair the Boltzmann weight sees.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quandle import FiniteQuandle

Letter = tuple[int, int]  # (generator index i >= 1, sign +1/-1)


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class NotAKnotError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        word = tuple((int(i), 1 if s > 0 else -1) for i, s in self.word)
        for i, _ in word:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator s{i} out of range for {self.strands} strands")
        object.__setattr__(self, "word", word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return f"{self.strands}: " + " ".join(
            f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.word
        )

    def permutation(self) -> tuple[int, ...]:
        """Where each top position ends up at the bottom (0-based)."""
        pos = list(range(self.strands))
        for i, _ in self.word:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
        perm = [0] * self.strands
        for bottom, top in enumerate(pos):
            perm[top] = bottom
        return tuple(perm)

    def is_knot(self) -> bool:
        perm = self.permutation()
        x, steps = perm[0], 1
        while x != 0:
            x = perm[x]
            steps += 1
        return steps == self.strands

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.word))

    def conjugate(self, i: int, sign: int = 1) -> BraidWord:
        """``s_i^sign * w * s_i^-sign``."""
        return BraidWord(self.strands, ((i, sign),) + self.word + ((i, -sign),))


_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"k: s1 s2^-1 s1^3"``.  Powers expand; negative powers invert."""
    head, sep, body = text.partition(":")
    if not sep:
        raise BraidSyntaxError("expected '<strands>: <letters>'", 0)
    try:
        k = int(head)
    except ValueError:
        raise BraidSyntaxError(f"bad strand count {head.strip()!r}", 0) from None
    if k < 1:
        raise BraidSyntaxError("strand count must be >= 1", 0)
    offset = len(head) + 1
    word: list[Letter] = []
    for tok in _TOKEN.finditer(body):
        pos = offset + tok.start()
        m = _LETTER.match(tok.group())
        if not m:
            raise BraidSyntaxError(f"malformed token {tok.group()!r}", pos)
        i = int(m.group(1))
        if not 1 <= i <= k - 1:
            raise BraidSyntaxError(f"generator s{i} out of range for {k} strands", pos)
        power = int(m.group(2)) if m.group(2) is not None else 1
        word.extend([(i, 1 if power > 0 else -1)] * abs(power))
    return BraidWord(k, tuple(word))


def torus_braid(l: int) -> BraidWord:
    """``s1^l`` on two strands; closes to the torus knot T(2, l)."""
    if l < 1 or l % 2 == 0:
        raise ValueError(f"T(2,{l}) needs l odd and positive")
    return BraidWord(2, ((1, 1),) * l)


def s_knot_braid(m: int, n: int) -> BraidWord:
    """``s1^m s2^-1 s1^n s2^-1`` on three strands (the knot S(m, n))."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    b = BraidWord(3, ((1, 1),) * m + ((2, -1),) + ((1, 1),) * n + ((2, -1),))
    if not b.is_knot():
        raise NotAKnotError(f"closure of S({m},{n}) braid is not a knot")
    return b


FIGURE_EIGHT = BraidWord(3, ((1, 1), (2, -1), (1, 1), (2, -1)))


def parse_knot(spec: str) -> BraidWord:
    """Builtin knot names ``torus:L``, ``sknot:M,N``, ``fig8``, ``unknot``,
    or a raw braid ``"k: ..."``."""
    s = spec.strip()
    if s.startswith("torus:"):
        return torus_braid(int(s[6:]))
    if s.startswith("sknot:"):
        m, n = s[6:].split(",")
        return s_knot_braid(int(m), int(n))
    if s in ("fig8", "figure8", "4_1"):
        return FIGURE_EIGHT
    if s == "unknot":
        return BraidWord(1)
    return parse_braid(s)


@dataclass(frozen=True)
class Crossing:
    position: int
    generator: int
    sign: int


@dataclass(frozen=True)
class ClosedDiagram:
    braid: BraidWord

    def __post_init__(self):
        if not self.braid.is_knot():
            raise NotAKnotError(f"closure of {self.braid} has more than one component")

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        return tuple(Crossing(p, i, s) for p, (i, s) in enumerate(self.braid.word))

    @property
    def strands(self) -> int:
        return self.braid.strands


@dataclass(frozen=True)
class Coloring:
    """A coloring, determined by the colours of the top strands.

    ``states[j]`` is the strand colour tuple after ``j`` letters, and
    ``crossing_colors[j]`` the (under, over) pair at letter ``j``.
    """

    top: tuple[int, ...]
    states: tuple[tuple[int, ...], ...]
    crossing_colors: tuple[tuple[int, int], ...]

    def colors(self) -> set[int]:
        return {c for st in self.states for c in st}


def propagate(word: Sequence[Letter], top: Sequence[int], X: FiniteQuandle) -> Coloring:
    op, rdiv = X.table, X.rdiv
    state = list(top)
    states = [tuple(state)]
    pairs = []
    for i, s in word:
        a, b = state[i - 1], state[i]
        if s > 0:
            pairs.append((a, b))
            state[i - 1], state[i] = b, op[a][b]
        else:
            z = rdiv(b, a)
            pairs.append((z, a))
            state[i - 1], state[i] = z, a
        states.append(tuple(state))
    return Coloring(tuple(top), tuple(states), tuple(pairs))


def _colorings_with_prefix(word, k, X, first: int) -> list[Coloring]:
    out = []
    for rest in itertools.product(range(X.order), repeat=k - 1):
        top = (first,) + rest
        c = propagate(word, top, X)
        if c.states[-1] == top:
            out.append(c)
    return out


def enumerate_colorings(
    D: ClosedDiagram | BraidWord, X: FiniteQuandle, workers: int = 1
) -> list[Coloring]:
    """Every X-coloring of the closure, in lexicographic order of top tuples.

    All ``|X|^k`` top tuples are propagated through the word; a tuple is a
    coloring when it returns to itself at the bottom.  With ``workers > 1``
    the first-strand colours are farmed out to processes; the output order
    is the same either way.
    """
    if isinstance(D, BraidWord):
        D = ClosedDiagram(D)
    word, k = D.braid.word, D.strands
    firsts = range(X.order)
    if workers <= 1:
        chunks = [_colorings_with_prefix(word, k, X, a) for a in firsts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(
                    _colorings_with_prefix,
                    itertools.repeat(word),
                    itertools.repeat(k),
                    itertools.repeat(X),
                    firsts,
                )
            )
    return [c for chunk in chunks for c in chunk]


def count_colorings(D: ClosedDiagram | BraidWord, X: FiniteQuandle) -> int:
    return len(enumerate_colorings(D, X))


def check_type_r_extension(c: Coloring, X: FiniteQuandle, r: int) -> bool:
    """Whether ``x (*y)^r == x`` for all colours ``x, y`` used by ``c``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    used = sorted(c.colors())
    for x, y in itertools.product(used, repeat=2):
        z = x
        for _ in range(r):
            z = X.table[z][y]
        if z != x:
            return False
    return True


def iter_words(strands: int, length: int) -> Iterable[BraidWord]:
    letters = [(i, s) for i in range(1, strands) for s in (1, -1)]
    for w in itertools.product(letters, repeat=length):
        yield BraidWord(strands, w)
