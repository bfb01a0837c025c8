"""Chord-diagram calculus for isolated boundary critical points on surfaces."""

from .counting import count_atoms_pformula, count_atoms_recurrence, free_point_count
from .diagram import (
    ChordDiagram,
    DiagramError,
    DiagramSemanticError,
    DiagramSyntaxError,
    GluingSubstitution,
    format_diagram,
    parse_diagram,
)
from .enumeration import enumerate_diagrams, enumerate_optimal_candidates
from .classify import (
    ClassCatalog,
    canonical_form,
    chord_parity_ok,
    classify,
    forbidden_pair_present,
    free_points_odd_ok,
    is_optimal_diagram,
    minimal_critical_count,
    standard_substitution,
)
from .localmodel import build_local_model, extremum_model, sector_arc_count, zero_rays
from .surface import (
    BandSurface,
    NotCloseable,
    SurfaceInvariants,
    build_atom,
    close_up,
    find_full_ways,
    invariants,
)

__version__ = "0.1.0"

__all__ = [
    "BandSurface",
    "ChordDiagram",
    "ClassCatalog",
    "DiagramError",
    "DiagramSemanticError",
    "DiagramSyntaxError",
    "GluingSubstitution",
    "NotCloseable",
    "SurfaceInvariants",
    "build_atom",
    "build_local_model",
    "canonical_form",
    "chord_parity_ok",
    "classify",
    "close_up",
    "count_atoms_pformula",
    "count_atoms_recurrence",
    "enumerate_diagrams",
    "enumerate_optimal_candidates",
    "extremum_model",
    "find_full_ways",
    "forbidden_pair_present",
    "format_diagram",
    "free_point_count",
    "free_points_odd_ok",
    "invariants",
    "is_optimal_diagram",
    "minimal_critical_count",
    "parse_diagram",
    "sector_arc_count",
    "standard_substitution",
    "zero_rays",
]
