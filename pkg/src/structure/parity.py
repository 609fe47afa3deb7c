"""2-faces, evenness and bipartiteness."""

import logging
from itertools import combinations
from typing import Dict, List

import networkx as nx

from ..faces.face import ClosureFailure, Face, FaceKey, span_face
from ..gkm.errors import PreconditionError
from ..gkm.model import GKMGraph

logger = logging.getLogger(__name__)


def two_faces(graph: GKMGraph) -> List[Face]:
    """Return all 2-faces spanned by pairs of darts, deduplicated, in canonical order."""
    if graph.connection is None:
        raise PreconditionError("2-faces need a connection")
    faces: Dict[FaceKey, Face] = {}
    for p in graph.vertices:
        for pair in combinations(graph.star(p), 2):
            result = span_face(graph, p, pair)
            if isinstance(result, ClosureFailure):
                logger.debug(f"Pair {pair} at {p} spans no 2-face")
                continue
            faces.setdefault(result.key, result)
    return sorted(faces.values(), key=lambda f: f.sort_key)


def is_even(graph: GKMGraph) -> bool:
    """Return True if every 2-face is a cycle of even length."""
    return all(len(face.vertices) % 2 == 0 for face in two_faces(graph))


def is_bipartite(graph: GKMGraph) -> bool:
    """Return True if the underlying graph is 2-vertex-colorable."""
    return nx.is_bipartite(graph.as_networkx())
