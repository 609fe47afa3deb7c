"""Facets from balanced colorings, and the facet existence test."""

import logging
from typing import Dict, List, Set

import networkx as nx

from ..faces.face import ClosureFailure, Face, make_face, span_face, vertex_face
from ..gkm.errors import FacetConsistencyError, PreconditionError
from ..gkm.model import GKMGraph
from .coloring import BalancedColoring

logger = logging.getLogger(__name__)


def facets_from_coloring(graph: GKMGraph, coloring: BalancedColoring) -> List[Face]:
    """Return the connected components of every color-deleted subgraph.

    Each component is checked to be a totally geodesic (n-1)-face.

    Raises:
        FacetConsistencyError: If a component fails the geodesic check
    """
    if graph.connection is None:
        raise PreconditionError("Facets need a connection")
    n = graph.dimension
    facets: Dict[tuple, Face] = {}
    for removed in range(1, n + 1):
        kept = nx.MultiGraph()
        kept.add_nodes_from(graph.vertices)
        for dart in graph.edges():
            if coloring.color[dart.edge] != removed:
                kept.add_edge(dart.source, dart.target, key=dart.edge)

        for component in nx.connected_components(kept):
            if n == 1:
                face = vertex_face(next(iter(component)))
            else:
                local: Dict[str, Set[str]] = {
                    p: {d for d in graph.star(p) if coloring.dart_color(graph, d) != removed}
                    for p in component
                }
                face = make_face(graph, local, n - 1)
                if not face.is_totally_geodesic(graph):
                    raise FacetConsistencyError(
                        f"Component of color-deleted subgraph {removed} at "
                        f"{min(component)} is not a totally geodesic face"
                    )
            facets.setdefault(face.key, face)

    result = sorted(facets.values(), key=lambda f: f.sort_key)
    logger.info(f"Found {len(result)} facets from coloring")
    return result


def has_facets(graph: GKMGraph) -> bool:
    """Return True iff every star(p) minus one dart spans an (n-1)-face."""
    if graph.connection is None:
        raise PreconditionError("Facets need a connection")
    if graph.dimension == 1:
        return True
    for p in graph.vertices:
        star = graph.star(p)
        for e in star:
            seed = [d for d in star if d != e]
            if isinstance(span_face(graph, p, seed), ClosureFailure):
                logger.debug(f"No facet at {p} transversal to {e}")
                return False
    return True
