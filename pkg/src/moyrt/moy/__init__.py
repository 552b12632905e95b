"""Layered MOY graphs and their sl(N) state sum."""

from .diagram import (
    Cap,
    Crossing,
    Cup,
    Diagnostic,
    DiagramError,
    Fork,
    Join,
    LayeredDiagram,
    Strand,
    disjoint_union,
    mirror_crossings,
    profiles,
    reverse_orientation,
    validate,
)
from .relations import Tangle, build_relation, check_relation, close, ladder_events, relation_grid
from .state_sum import (
    SweepStats,
    bracket,
    bracket_naive,
    colored_rotation_number,
    labels,
    pi_count,
    turning_contribution,
    vertex_weight_exponent,
)

__all__ = [
    "Cap",
    "Crossing",
    "Cup",
    "Diagnostic",
    "DiagramError",
    "Fork",
    "Join",
    "LayeredDiagram",
    "Strand",
    "SweepStats",
    "Tangle",
    "bracket",
    "bracket_naive",
    "build_relation",
    "check_relation",
    "close",
    "colored_rotation_number",
    "disjoint_union",
    "labels",
    "ladder_events",
    "mirror_crossings",
    "pi_count",
    "profiles",
    "relation_grid",
    "reverse_orientation",
    "turning_contribution",
    "validate",
    "vertex_weight_exponent",
]
