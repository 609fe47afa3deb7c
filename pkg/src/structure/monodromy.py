"""Monodromy of the connection around 2-faces."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from ..faces.face import Face
from ..gkm.errors import PreconditionError
from ..gkm.model import GKMGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonodromyResult:
    """Composite of connection maps around the cycle of a 2-face.

    Attributes:
        face: The 2-face
        base: Start and end vertex of the walk
        walk: Darts traversed, in order
        permutation: ``permutation[e]`` is the image of e in star(base)
    """

    face: Face
    base: str
    walk: Tuple[str, ...]
    permutation: Mapping[str, str]

    def is_identity(self) -> bool:
        return all(e == image for e, image in self.permutation.items())

    def moved(self) -> List[str]:
        return sorted(e for e, image in self.permutation.items() if e != image)

    def fixes_transversal(self, graph: GKMGraph) -> bool:
        """Return True if every dart at base off the face is fixed."""
        return all(self.permutation[e] == e for e in self.face.transversal(graph, self.base))


def face_cycle(graph: GKMGraph, face: Face, base: str, reverse: bool = False) -> Tuple[str, ...]:
    """Return the darts of the face cycle from ``base`` back to ``base``.

    The walk starts with the smallest face dart at base, or the largest
    when ``reverse`` is set.
    """
    local = face.star(graph, base)
    start = local[-1] if reverse else local[0]
    walk = [start]
    current = graph.dart(start)
    while current.target != base:
        options = [d for d in face.star(graph, current.target) if d != current.twin]
        current = graph.dart(options[0])
        walk.append(current.id)
    return tuple(walk)


def two_face_monodromy(
    graph: GKMGraph, face: Face, base: str, reverse: bool = False
) -> MonodromyResult:
    """Compose theta along the cycle of ``face`` starting and ending at ``base``.

    Args:
        graph: Graph carrying a connection
        face: A 2-face
        base: A vertex of the face
        reverse: Walk the cycle in the opposite direction

    Returns:
        The permutation of star(base)
    """
    if graph.connection is None:
        raise PreconditionError("Monodromy needs a connection")
    if face.dim != 2:
        raise PreconditionError(f"Monodromy is defined on 2-faces, got dim {face.dim}")
    if base not in face.vertices:
        raise PreconditionError(f"Vertex {base} is not on the face")

    walk = face_cycle(graph, face, base, reverse)
    transport = graph.connection.transport
    permutation: Dict[str, str] = {e: e for e in graph.star(base)}
    for dart_id in walk:
        permutation = {e: transport(dart_id, image) for e, image in permutation.items()}
    return MonodromyResult(face, base, walk, permutation)
