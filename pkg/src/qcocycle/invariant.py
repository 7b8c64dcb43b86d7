"""State-sum cocycle invariants and the scaled families built from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cocycle import Cocycle2, _is_prime
from .diagram import BraidWord, ClosedDiagram, Coloring, Crossing, enumerate_colorings
from .quandle import FiniteQuandle, quandle_type


class QuandleMismatch(ValueError):
    pass


class UnsupportedOmega(ValueError):
    """No closed form is available for this ``r``."""


@dataclass(frozen=True)
class WeightMultiset:
    """A multiset over Z/nZ; ``counts[v]`` is the multiplicity of ``v``."""

    modulus: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if len(counts) != self.modulus or any(c < 0 for c in counts):
            raise ValueError("counts must list a non-negative multiplicity per residue")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_values(cls, modulus: int, values: Iterable[int]) -> WeightMultiset:
        counts = [0] * modulus
        for v in values:
            counts[v % modulus] += 1
        return cls(modulus, tuple(counts))

    @classmethod
    def from_mapping(cls, modulus: int, mapping: Mapping[int, int]) -> WeightMultiset:
        counts = [0] * modulus
        for v, c in mapping.items():
            counts[v % modulus] += c
        return cls(modulus, tuple(counts))

    @classmethod
    def zeros(cls, modulus: int, size: int) -> WeightMultiset:
        return cls(modulus, (size,) + (0,) * (modulus - 1))

    @classmethod
    def parse(cls, modulus: int, text: str) -> WeightMultiset:
        """Inverse of ``str``: ``"0:6 1:24"``."""
        mapping: dict[int, int] = {}
        for tok in text.split():
            v, _, c = tok.partition(":")
            mapping[int(v)] = mapping.get(int(v), 0) + int(c)
        return cls.from_mapping(modulus, mapping)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return self.size

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.counts) if c)

    def items(self) -> list[tuple[int, int]]:
        return [(v, c) for v, c in enumerate(self.counts) if c]

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return self.support <= {0}

    def __str__(self) -> str:
        return " ".join(f"{v}:{c}" for v, c in self.items())


def scale_multiset(k: int, M: WeightMultiset) -> WeightMultiset:
    counts = [0] * M.modulus
    for v, c in M.items():
        counts[(k * v) % M.modulus] += c
    return WeightMultiset(M.modulus, tuple(counts))


def negate_multiset(M: WeightMultiset) -> WeightMultiset:
    return scale_multiset(-1, M)


def crossing_weight(x: Crossing, C: Coloring, phi: Cocycle2) -> int:
    """Signed Boltzmann weight ``sign(x) * phi(under, over)``."""
    a, b = C.crossing_colors[x.position]
    return (x.sign * phi(a, b)) % phi.modulus


def state_weight(D: ClosedDiagram, C: Coloring, phi: Cocycle2) -> int:
    return sum(crossing_weight(x, C, phi) for x in D.crossings) % phi.modulus


def phi_invariant(
    K: BraidWord | ClosedDiagram, X: FiniteQuandle, phi: Cocycle2, workers: int = 1
) -> WeightMultiset:
    """Multiset of total weights over all X-colorings of the closure of ``K``."""
    if phi.quandle != X:
        raise QuandleMismatch("cocycle is defined on a different quandle")
    D = K if isinstance(K, ClosedDiagram) else ClosedDiagram(K)
    cols = enumerate_colorings(D, X, workers=workers)
    return WeightMultiset.from_values(phi.modulus, (state_weight(D, C, phi) for C in cols))


@dataclass(frozen=True)
class OmegaFamily:
    """``{k * base : k in Z_n}``.

    In the underlying invariant each member occurs infinitely often and the
    index runs over all integers; over Z/nZ the residues of ``k`` already
    give every distinct member, so they are stored once each.
    """

    modulus: int
    base: WeightMultiset
    members: tuple[WeightMultiset, ...]
    r: int | None = None
    infinite_multiplicity: bool = True

    def __getitem__(self, k: int) -> WeightMultiset:
        return self.members[k % self.modulus]

    def __iter__(self):
        return iter(self.members)

    @classmethod
    def from_base(cls, base: WeightMultiset, r: int | None = None) -> OmegaFamily:
        members = tuple(scale_multiset(k, base) for k in range(base.modulus))
        return cls(base.modulus, base, members, r)


def omega_family(
    K: BraidWord | ClosedDiagram, X: FiniteQuandle, phi: Cocycle2, r: int
) -> OmegaFamily:
    """The family of multisets attached to the torus-knot ``sigma^r K``.

    Defined only when ``r`` is a non-negative multiple of the type of ``X``;
    then every coloring of ``K`` extends and the weight along the class
    ``k*alpha + l*beta`` is ``k`` times the weight of ``K``.
    """
    s = quandle_type(X)
    if r < 0 or not isinstance(s, int) or r % s:
        raise UnsupportedOmega(f"r={r} is not a non-negative multiple of the type {s}")
    return OmegaFamily.from_base(phi_invariant(K, X, phi), r)


def twist_spun_reference(q: int, p: int | None = None) -> WeightMultiset:
    """Reference values of the 3-cocycle invariant of the 2-twist-spun T(2, q).

    With the Mochizuki cocycle for ``p == q``: each residue ``-2k^2`` for
    ``k = 0..q-1`` with multiplicity ``q``.  For ``p != q`` the invariant is
    the all-zero multiset over Z_p, one entry per trivial coloring by R_p.
    These are transcribed values, not computed from a surface diagram.
    """
    for v in (q,) if p is None else (q, p):
        if v % 2 == 0 or not _is_prime(v):
            raise ValueError(f"{v} is not an odd prime")
    if p is not None and p != q:
        return WeightMultiset.zeros(p, p)
    return WeightMultiset.from_values(q, (-2 * k * k for k in range(q) for _ in range(q)))


def residue_support(q: int) -> frozenset[int]:
    return twist_spun_reference(q).support
