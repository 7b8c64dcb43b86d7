"""Ribbon-concordance obstructions from multiset inclusion.

All checks are one-sided: an obstructed verdict rules out ``F1 >= F0``; a
verdict that is not obstructed proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cocycle import _is_prime, q6_appendix_cocycle
from .diagram import s_knot_braid, torus_braid
from .invariant import (
    OmegaFamily,
    WeightMultiset,
    negate_multiset,
    omega_family,
    twist_spun_reference,
)
from .quandle import make_q6

THM11 = "thm11"
THM12 = "thm12"


class ModulusMismatch(ValueError):
    pass


def m_subset(a: WeightMultiset, b: WeightMultiset) -> bool:
    """Every value occurring in ``a`` occurs in ``b``; multiplicities ignored."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"Z_{a.modulus} vs Z_{b.modulus}")
    return a.support <= b.support


@dataclass(frozen=True)
class Verdict:
    obstructed: bool
    theorem: str
    direction: tuple[str, str] = ("F1", "F0")
    witness: WeightMultiset | None = None
    # index k of the offending member of the F1 family (family check only)
    witness_index: int | None = None
    inputs: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.obstructed != (self.witness is not None):
            raise ValueError("a witness is present exactly when obstructed")

    def __str__(self) -> str:
        f1, f0 = self.direction
        if self.obstructed:
            return f"obstructed: {f1} >= {f0} is impossible (witness {self.witness})"
        return f"not obstructed: {f1} >= {f0}"

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            w = {
                "modulus": self.witness.modulus,
                "multiset": {str(v): c for v, c in self.witness.items()},
                "support": sorted(self.witness.support),
            }
            if self.witness_index is not None:
                w["member"] = self.witness_index
        return {
            "obstructed": self.obstructed,
            "theorem": self.theorem,
            "direction": list(self.direction),
            "witness": w,
            "inputs": self.inputs,
        }


def theorem11_check(
    phi1: WeightMultiset, phi0: WeightMultiset, direction=("F1", "F0")
) -> Verdict:
    """Obstructed when the invariant of ``F1`` is not m-included in that of ``F0``."""
    ok = m_subset(phi1, phi0)
    return Verdict(
        obstructed=not ok,
        theorem=THM11,
        direction=tuple(direction),
        witness=None if ok else phi1,
        inputs={"phi1": str(phi1), "phi0": str(phi0), "modulus": phi1.modulus},
    )


def theorem12_check(om1: OmegaFamily, om0: OmegaFamily, direction=("F1", "F0")) -> Verdict:
    """Obstructed when some member of ``om1`` is m-included in no member of ``om0``."""
    if om1.modulus != om0.modulus:
        raise ModulusMismatch(f"Z_{om1.modulus} vs Z_{om0.modulus}")
    inputs = {"base1": str(om1.base), "base0": str(om0.base), "modulus": om1.modulus}
    for k, a in enumerate(om1.members):
        if not any(m_subset(a, b) for b in om0.members):
            return Verdict(True, THM12, tuple(direction), a, k, inputs)
    return Verdict(False, THM12, tuple(direction), inputs=inputs)


def _odd_prime(q: int):
    if q % 2 == 0 or not _is_prime(q):
        raise ValueError(f"{q} is not an odd prime")


def corollary21_report(q: int, q_prime: int | None = None) -> tuple[Verdict, Verdict]:
    """Twist-spun torus knots ``tau^2 T(2,q)``.

    With two distinct primes, compare ``tau^2 T(2,q)`` and
    ``tau^2 T(2,q')`` both ways, each time using the Mochizuki cocycle of
    the left-hand knot.  With ``q_prime=None`` compare the knot with its
    orientation reverse ``-F``, whose invariant is the negated multiset.
    """
    _odd_prime(q)
    name = f"tau2 T(2,{q})"
    if q_prime is None:
        phi = twist_spun_reference(q)
        neg = negate_multiset(phi)
        return (
            theorem11_check(phi, neg, (name, "-" + name)),
            theorem11_check(neg, phi, ("-" + name, name)),
        )
    _odd_prime(q_prime)
    if q == q_prime:
        raise ValueError("need two distinct primes")
    other = f"tau2 T(2,{q_prime})"
    forward = theorem11_check(
        twist_spun_reference(q), twist_spun_reference(q_prime, p=q), (name, other)
    )
    backward = theorem11_check(
        twist_spun_reference(q_prime), twist_spun_reference(q, p=q_prime), (other, name)
    )
    return forward, backward


MAX_COR43 = 21


def corollary43_report(l: int, m: int, n: int, r: int, s: int) -> Verdict:
    """``sigma^r T(2,l)`` against ``sigma^s S(m,n)`` with Q6 and its Z_4 cocycle."""
    if r % 4 or s % 4 or r < 0 or s < 0:
        raise ValueError(f"r and s must be non-negative multiples of 4, got r={r}, s={s}")
    for name, v in (("l", l), ("m", m), ("n", n)):
        if v % 6 != 3:
            raise ValueError(f"{name}={v} is not 3 mod 6")
        if v > MAX_COR43:
            raise ValueError(f"{name}={v} exceeds the bound {MAX_COR43}")
    X, phi = make_q6(), q6_appendix_cocycle()
    om1 = omega_family(torus_braid(l), X, phi, r)
    om0 = omega_family(s_knot_braid(m, n), X, phi, s)
    v = theorem12_check(om1, om0, (f"sigma^{r} T(2,{l})", f"sigma^{s} S({m},{n})"))
    v.inputs.update(l=l, m=m, n=n, r=r, s=s)
    return v
