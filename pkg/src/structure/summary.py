"""Structural classification of a graph for the ``structure`` command."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..faces.face import Face
from ..gkm.connection import ensure_connection, independence_level
from ..gkm.model import GKMGraph
from .coloring import BalancedColoring, ColoringObstruction, balanced_coloring
from .facets import facets_from_coloring, has_facets
from .parity import is_bipartite, is_even

logger = logging.getLogger(__name__)


@dataclass
class StructureSummary:
    """Independence, parity, coloring and facets of one graph."""

    independence: int
    even: bool
    bipartite: bool
    has_facets: bool
    coloring: Optional[BalancedColoring] = None
    obstruction: Optional[ColoringObstruction] = None
    facets: List[Face] = field(default_factory=list)

    @property
    def balanced(self) -> bool:
        return self.coloring is not None

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "independence": self.independence,
            "even": self.even,
            "bipartite": self.bipartite,
            "balanced": self.balanced,
            "has_facets": self.has_facets,
        }
        if self.coloring is not None:
            doc["coloring"] = self.coloring.to_document()
            doc["facets"] = [
                {"vertices": sorted(f.vertices), "darts": sorted(f.darts), "rank": f.rank}
                for f in self.facets
            ]
        if self.obstruction is not None:
            doc["obstruction"] = self.obstruction.to_document()
        return doc


def structure_summary(graph: GKMGraph) -> StructureSummary:
    """Classify ``graph``; uses the supplied connection or the canonical one."""
    graph = ensure_connection(graph)
    bipartite = is_bipartite(graph)
    even = is_even(graph)
    if bipartite and not even:
        raise AssertionError("Bipartite graph with an odd 2-face")

    summary = StructureSummary(
        independence=independence_level(graph),
        even=even,
        bipartite=bipartite,
        has_facets=has_facets(graph),
    )
    result = balanced_coloring(graph)
    if isinstance(result, BalancedColoring):
        summary.coloring = result
        summary.facets = facets_from_coloring(graph, result)
    else:
        summary.obstruction = result
    logger.info(
        f"Structure: j={summary.independence}, even={even}, bipartite={bipartite}, "
        f"balanced={summary.balanced}, facets={summary.has_facets}"
    )
    return summary
