"""Totally geodesic faces and their closure from a seed of darts."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple, Union

from ..gkm.errors import PreconditionError
from ..gkm.linalg import rank_of_vectors
from ..gkm.model import Dart, GKMGraph

logger = logging.getLogger(__name__)

FaceKey = Tuple[Tuple[str, ...], Tuple[str, ...]]


@dataclass(frozen=True)
class Face:
    """A connected, d-valent, connection-closed subgraph.

    Attributes:
        vertices: Vertex ids of the face
        darts: Dart ids of the face, closed under twinning
        dim: Valence d of the subgraph
        rank: Dimension of the rational span of the face weights
    """

    vertices: FrozenSet[str]
    darts: FrozenSet[str]
    dim: int
    rank: int

    @property
    def key(self) -> FaceKey:
        return tuple(sorted(self.vertices)), tuple(sorted(self.darts))

    @property
    def sort_key(self) -> Tuple[int, Tuple[str, ...], Tuple[str, ...]]:
        vertices, darts = self.key
        return self.dim, vertices, darts

    def codim(self, graph: GKMGraph) -> int:
        return graph.dimension - self.dim

    def star(self, graph: GKMGraph, p: str) -> Tuple[str, ...]:
        """Return the face darts with source ``p``."""
        return tuple(d for d in graph.star(p) if d in self.darts)

    def transversal(self, graph: GKMGraph, p: str) -> Tuple[str, ...]:
        """Return the darts at ``p`` that are not edges of the face."""
        return tuple(d for d in graph.star(p) if d not in self.darts)

    def edge_darts(self, graph: GKMGraph) -> List[Dart]:
        """Return one dart per undirected edge of the face."""
        return [d for d in graph.edges() if d.id in self.darts]

    def contains(self, other: "Face") -> bool:
        """Return True if ``other`` is a subface of this face (possibly equal)."""
        return other.vertices <= self.vertices and other.darts <= self.darts

    def is_totally_geodesic(self, graph: GKMGraph) -> bool:
        """Check d-valence, twin closure and the totally geodesic condition."""
        assert graph.connection is not None
        for p in self.vertices:
            local = set(self.star(graph, p))
            if len(local) != self.dim:
                return False
            for d in local:
                dart = graph.dart(d)
                if dart.twin not in self.darts:
                    return False
                image = {graph.connection.transport(d, e) for e in local}
                if image != set(self.star(graph, dart.target)):
                    return False
        return True


@dataclass(frozen=True)
class ClosureFailure:
    """Witness that a seed does not span a face.

    Attributes:
        base: Vertex holding the seed
        seed: Seed darts
        vertex: Vertex where transport produced too many darts
        darts: The darts accumulated at ``vertex``
    """

    base: str
    seed: Tuple[str, ...]
    vertex: str
    darts: Tuple[str, ...]


def vertex_face(p: str) -> Face:
    return Face(frozenset([p]), frozenset(), 0, 0)


def whole_graph_face(graph: GKMGraph) -> Face:
    vertices, darts = frozenset(graph.vertices), frozenset(graph.darts)
    return Face(vertices, darts, graph.dimension, graph.torus_rank)


def make_face(graph: GKMGraph, local: Dict[str, Set[str]], dim: int) -> Face:
    """Assemble a Face from per-vertex dart sets and compute its rank."""
    darts = frozenset(d for ds in local.values() for d in ds)
    weights = [graph.weight(d).entries for d in sorted(darts)]
    return Face(frozenset(local), darts, dim, rank_of_vectors(weights))


def span_face(graph: GKMGraph, p: str, seed: Iterable[str]) -> Union[Face, ClosureFailure]:
    """Return the minimal totally geodesic subgraph containing ``seed`` at ``p``.

    The dart set is transported breadth-first along every accepted dart
    until it stabilizes. If some vertex collects more than ``len(seed)``
    darts no face with exactly this star at ``p`` exists, and a witness is
    returned instead.

    Args:
        graph: Graph carrying a connection
        p: Base vertex
        seed: Nonempty subset of star(p)

    Returns:
        The spanned Face, or a ClosureFailure witness
    """
    if graph.connection is None:
        raise PreconditionError("span_face needs a connection")
    connection = graph.connection
    seed_set = set(seed)
    if not seed_set:
        raise PreconditionError("Seed must be nonempty")
    if not seed_set <= set(graph.star(p)):
        raise PreconditionError(f"Seed is not contained in star({p})")

    size = len(seed_set)
    local: Dict[str, Set[str]] = {p: set(seed_set)}
    queue = deque([p])
    while queue:
        v = queue.popleft()
        current = sorted(local[v])
        for d in current:
            w = graph.dart(d).target
            image = {connection.transport(d, e) for e in current}
            accumulated = local.setdefault(w, set())
            if image <= accumulated:
                continue
            accumulated |= image
            if len(accumulated) > size:
                logger.debug(f"Seed {sorted(seed_set)} at {p} does not close: {w} overflows")
                return ClosureFailure(p, tuple(sorted(seed_set)), w, tuple(sorted(accumulated)))
            queue.append(w)

    face = make_face(graph, local, size)
    if not face.is_totally_geodesic(graph):
        # a stable, size-bounded state is closed
        raise AssertionError(f"Closure of {sorted(seed_set)} at {p} is not totally geodesic")
    return face
