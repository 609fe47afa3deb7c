"""Independence level and the canonical connection of a GKM graph."""

import logging
from itertools import combinations
from typing import Dict

from .errors import AmbiguousCandidateError, NoCandidateError
from .linalg import collinear_scalar, rank_of_vectors
from .model import Connection, GKMGraph, check_connection

logger = logging.getLogger(__name__)


def _subsets_independent(graph: GKMGraph, size: int) -> bool:
    for p in graph.vertices:
        weights = [graph.weight(d).entries for d in graph.star(p)]
        for subset in combinations(weights, size):
            if rank_of_vectors(list(subset)) < size:
                return False
    return True


def independence_level(graph: GKMGraph) -> int:
    """Return the largest j <= n such that any <= j weights at a vertex are independent.

    Args:
        graph: A validated GKM graph

    Returns:
        The independence level; n when all weights at every vertex are independent
    """
    level = 0
    for size in range(1, graph.dimension + 1):
        if not _subsets_independent(graph, size):
            break
        level = size
    logger.debug(f"Independence level: {level}")
    return level


def compute_canonical_connection(graph: GKMGraph) -> Connection:
    """Solve the collinearity axiom for a unique connection.

    For every dart d = (p->q) and e in star(p), theta_d(e) is the unique e' in
    star(q) with weight(e') - weight(e) a rational multiple of weight(d).
    Uniqueness is guaranteed for 3-independent graphs; other graphs are
    attempted and fail loudly when the weights do not determine the map.

    Raises:
        NoCandidateError: If some edge has no admissible image, or the images
            do not form a bijection
        AmbiguousCandidateError: If some edge has several admissible images
    """
    level = independence_level(graph)
    if level < 3:
        logger.warning(f"Independence level {level} < 3: the connection may not be unique")

    maps: Dict[str, Dict[str, str]] = {}
    for dart_id in sorted(graph.darts):
        dart = graph.dart(dart_id)
        along = dart.weight.entries
        mapping: Dict[str, str] = {}
        for e in graph.star(dart.source):
            start = graph.weight(e)
            candidates = [
                target
                for target in graph.star(dart.target)
                if collinear_scalar((graph.weight(target) - start).entries, along) is not None
            ]
            if not candidates:
                raise NoCandidateError("No collinear image", dart_id, graph.dart(e).edge)
            if len(candidates) > 1:
                raise AmbiguousCandidateError(
                    f"{len(candidates)} collinear images", dart_id, graph.dart(e).edge
                )
            mapping[e] = candidates[0]
        missed = set(graph.star(dart.target)) - set(mapping.values())
        if missed:
            edge = graph.dart(min(missed)).edge
            raise NoCandidateError("Map is not onto the star", dart_id, edge)
        maps[dart_id] = mapping

    connection = Connection(maps)
    check_connection(graph, connection, strict=True)
    if graph.connection is not None and graph.connection != connection:
        logger.warning("Supplied connection differs from the canonical one")
    return connection


def ensure_connection(graph: GKMGraph) -> GKMGraph:
    """Return ``graph`` carrying a connection, computing the canonical one if needed."""
    if graph.connection is not None:
        return graph
    logger.info("No connection supplied; computing the canonical connection")
    return graph.with_connection(compute_canonical_connection(graph))
