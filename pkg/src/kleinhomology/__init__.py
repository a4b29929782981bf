"""Exact chain-level computations for moduli of Klein surfaces.

The package enumerates ribbon and two-coloured (Moebius) graphs up to
the appropriate isomorphisms, realises their band surfaces, builds the
associated graph and cobar chain complexes with exact integer signs, and
verifies the operadic identities behind them (quadratic self-duality,
Koszulness, the modular-closure normal form).
"""

from .graphs import (DIANALYTIC, MOEBIUS, MOEBIUS_LEG_UNORIENTED, RIBBON,
                     VARIANTS, HalfEdgeGraph, from_json, one_vertex_graph,
                     to_dot, to_json, validate_graph)
from .canonical import (AutomorphismReport, automorphism_signs,
                        canonical_code, canonical_form, decode)

__all__ = [
    "RIBBON", "MOEBIUS", "DIANALYTIC", "MOEBIUS_LEG_UNORIENTED", "VARIANTS",
    "HalfEdgeGraph", "validate_graph", "one_vertex_graph",
    "to_json", "from_json", "to_dot",
    "canonical_code", "canonical_form", "decode",
    "automorphism_signs", "AutomorphismReport",
]
