"""Monodromy, parity, balanced colorings, facets and dual simplicial posets."""

from .coloring import BalancedColoring, ColoringObstruction, balanced_coloring
from .dual_poset import DualSimplicialPoset, build_dual_simplicial_poset
from .facets import facets_from_coloring, has_facets
from .monodromy import MonodromyResult, two_face_monodromy
from .parity import is_bipartite, is_even, two_faces
from .summary import StructureSummary, structure_summary

__all__ = [
    "BalancedColoring",
    "ColoringObstruction",
    "DualSimplicialPoset",
    "MonodromyResult",
    "StructureSummary",
    "balanced_coloring",
    "build_dual_simplicial_poset",
    "facets_from_coloring",
    "has_facets",
    "is_bipartite",
    "is_even",
    "structure_summary",
    "two_face_monodromy",
    "two_faces",
]
