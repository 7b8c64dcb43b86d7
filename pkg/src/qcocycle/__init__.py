"""Quandle cocycle invariants of braid-closure knots and ribbon-concordance checks."""

from .cocycle import (
    Cocycle2,
    Cocycle3,
    Coefficients,
    enumerate_2cocycles,
    mochizuki_cocycle,
    q6_appendix_cocycle,
    verify_2cocycle,
    verify_3cocycle,
)
from .concordance import (
    Verdict,
    corollary21_report,
    corollary43_report,
    m_subset,
    theorem11_check,
    theorem12_check,
)
from .diagram import (
    BraidWord,
    ClosedDiagram,
    Coloring,
    check_type_r_extension,
    enumerate_colorings,
    parse_braid,
    s_knot_braid,
    torus_braid,
)
from .invariant import (
    OmegaFamily,
    WeightMultiset,
    crossing_weight,
    negate_multiset,
    omega_family,
    phi_invariant,
    residue_support,
    scale_multiset,
    twist_spun_reference,
)
from .quandle import (
    FiniteQuandle,
    make_conjugation_quandle,
    make_dihedral,
    make_q6,
    quandle_type,
    verify_quandle_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "Cocycle2",
    "Cocycle3",
    "Coefficients",
    "enumerate_2cocycles",
    "mochizuki_cocycle",
    "q6_appendix_cocycle",
    "verify_2cocycle",
    "verify_3cocycle",
    "Verdict",
    "corollary21_report",
    "corollary43_report",
    "m_subset",
    "theorem11_check",
    "theorem12_check",
    "BraidWord",
    "ClosedDiagram",
    "Coloring",
    "check_type_r_extension",
    "enumerate_colorings",
    "parse_braid",
    "s_knot_braid",
    "torus_braid",
    "OmegaFamily",
    "WeightMultiset",
    "crossing_weight",
    "negate_multiset",
    "omega_family",
    "phi_invariant",
    "residue_support",
    "scale_multiset",
    "twist_spun_reference",
    "FiniteQuandle",
    "make_conjugation_quandle",
    "make_dihedral",
    "make_q6",
    "quandle_type",
    "verify_quandle_axioms",
]
