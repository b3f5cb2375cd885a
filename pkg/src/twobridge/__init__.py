"""Essential-surface invariants and Dehn surgery classification for the
2-bridge links L([r,s])."""

from .farey import (
    EVEN_ANY_EVEN,
    ODD_ODD,
    DomainError,
    GMatrix,
    QuadSequence,
    Rational,
    apply,
    edge_matrix,
    expand_as,
    from_partial_quotients,
    gcm,
    quad_sequence,
)
from .invariants import (
    SurfaceData,
    Weights,
    assemble,
    closed_form,
    edge_contribution,
    edge_euler,
    longitude_correction,
    mirror_slopes,
    swap_components,
)
from .classify import (
    CurveClass,
    GenusZeroSolution,
    SurgeryClassification,
    SurgeryKind,
    all_B_invariants,
    genus_zero_solutions,
    pairing,
    reducible_surgeries,
    satellite_candidates,
    surgery_knot,
    torus_knot_surgeries,
)
from .oracle import Report, SweepSpec, verify_closed_forms, verify_genus_zero, verify_symmetries
from .paths import EdgeLabel, EdgePath, PathEdge, Regime, catalog, is_minimal, path_edges

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
