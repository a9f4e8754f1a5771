"""Desk-scale verifier for triangular actions of the dicyclic groups.

Exact group arithmetic, covering-space bookkeeping, explicit permutation
monodromy, exponent-triple cover classification, real/anticonformal
actions, numeric curve-model checks and minimal-genus searches, plus a
CLI that bundles everything into machine-readable reports.
"""

from .covering import (
    ActionCensus,
    GeneratingVector,
    OrbifoldSignature,
    TriangularAction,
    fixed_point_count,
    is_purely_non_free,
    quotient_genus,
    quotient_signature,
    rh_genus,
    triangular_census,
)
from .group import (
    ConjugacyClass,
    DicyclicGroup,
    GroupAutomorphism,
    GroupElement,
    Subgroup,
)

__all__ = [
    "ActionCensus",
    "ConjugacyClass",
    "DicyclicGroup",
    "GeneratingVector",
    "GroupAutomorphism",
    "GroupElement",
    "OrbifoldSignature",
    "Subgroup",
    "TriangularAction",
    "fixed_point_count",
    "is_purely_non_free",
    "quotient_genus",
    "quotient_signature",
    "rh_genus",
    "triangular_census",
]

__version__ = "0.1.0"
