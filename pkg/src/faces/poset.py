"""Face enumeration and the graded face poset S(Γ)."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from ..gkm.errors import PreconditionError
from ..gkm.model import Connection, GKMGraph
from .face import ClosureFailure, Face, FaceKey, span_face, vertex_face, whole_graph_face

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FacePoset:
    """Faces ordered by inclusion, graded by rank.

    Attributes:
        faces: Faces in canonical order (dim, vertex ids, dart ids)
        ids: Stable face ids ``f0, f1, ...`` assigned at enumeration;
            restrictions keep the ids of the poset they came from
        diagnostics: Seeds whose closure failed during enumeration
    """

    faces: Tuple[Face, ...]
    ids: Mapping[FaceKey, str] = field(default_factory=dict)
    diagnostics: Tuple[ClosureFailure, ...] = ()

    @classmethod
    def from_faces(
        cls, faces: Iterable[Face], diagnostics: Iterable[ClosureFailure] = ()
    ) -> "FacePoset":
        ordered = tuple(sorted({f.key: f for f in faces}.values(), key=lambda f: f.sort_key))
        ids = {f.key: f"f{i}" for i, f in enumerate(ordered)}
        return cls(ordered, ids, tuple(diagnostics))

    def _restrict(self, faces: Iterable[Face]) -> "FacePoset":
        kept = tuple(faces)
        return FacePoset(kept, {f.key: self.ids[f.key] for f in kept}, self.diagnostics)

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __contains__(self, face: object) -> bool:
        return isinstance(face, Face) and face.key in self.ids

    def face_id(self, face: Face) -> str:
        return self.ids[face.key]

    def by_id(self, face_id: str) -> Face:
        for face in self.faces:
            if self.ids[face.key] == face_id:
                return face
        raise KeyError(face_id)

    def of_dim(self, dim: int) -> List[Face]:
        return [f for f in self.faces if f.dim == dim]

    def counts(self) -> Dict[int, int]:
        """Return the number of faces per dimension."""
        result: Dict[int, int] = {}
        for face in self.faces:
            result[face.dim] = result.get(face.dim, 0) + 1
        return result

    @staticmethod
    def less(a: Face, b: Face) -> bool:
        """Strict inclusion a < b."""
        return a.key != b.key and b.contains(a)

    def order_pairs(self) -> List[Tuple[Face, Face]]:
        """Return all pairs (a, b) with a < b."""
        return [(a, b) for a in self.faces for b in self.faces if self.less(a, b)]

    def hasse(self) -> nx.DiGraph:
        """Return the cover relations as a DiGraph on face ids (edges point upwards)."""
        order = nx.DiGraph()
        order.add_nodes_from(self.ids[f.key] for f in self.faces)
        order.add_edges_from((self.ids[a.key], self.ids[b.key]) for a, b in self.order_pairs())
        return nx.transitive_reduction(order)

    def to_document(self) -> Dict[str, Any]:
        """Export faces and cover relations as a JSON-ready mapping."""
        covers = sorted(self.hasse().edges(), key=lambda e: (int(e[0][1:]), int(e[1][1:])))
        return {
            "faces": [
                {
                    "id": self.ids[f.key],
                    "vertices": sorted(f.vertices),
                    "darts": sorted(f.darts),
                    "dim": f.dim,
                    "rank": f.rank,
                }
                for f in self.faces
            ],
            "covers": [list(edge) for edge in covers],
            "skipped_seeds": len(self.diagnostics),
        }


def enumerate_faces(
    graph: GKMGraph,
    max_dim: int,
    include_top: bool = False,
    extra: Optional[Iterable[Face]] = None,
) -> FacePoset:
    """Enumerate all faces of dimension <= ``max_dim``.

    Every (vertex, seed) with ``1 <= |seed| <= max_dim`` is closed with
    span_face. Seeds whose star is already covered by a known face of the
    same dimension are skipped, since the closure is determined by the seed.

    Args:
        graph: Graph carrying a connection
        max_dim: Largest face dimension to enumerate
        include_top: Add the whole graph as greatest element
        extra: Additional faces (e.g. facets from a coloring) to merge in

    Returns:
        The deduplicated face poset
    """
    if graph.connection is None:
        raise PreconditionError("Face enumeration needs a connection")
    if max_dim > graph.dimension:
        raise PreconditionError(f"max_dim {max_dim} exceeds dimension {graph.dimension}")

    faces: Dict[FaceKey, Face] = {}
    diagnostics: List[ClosureFailure] = []
    for p in graph.vertices:
        face = vertex_face(p)
        faces[face.key] = face

    for dim in range(1, max(max_dim, 0) + 1):
        covered = set()
        for p in graph.vertices:
            for seed in combinations(graph.star(p), dim):
                if (p, seed) in covered:
                    continue
                result = span_face(graph, p, seed)
                if isinstance(result, ClosureFailure):
                    diagnostics.append(result)
                    continue
                faces.setdefault(result.key, result)
                for q in result.vertices:
                    covered.add((q, result.star(graph, q)))
        logger.debug(f"Faces of dim {dim}: {sum(1 for f in faces.values() if f.dim == dim)}")

    for face in extra or ():
        faces.setdefault(face.key, face)
    if include_top:
        top = whole_graph_face(graph)
        faces.setdefault(top.key, top)

    if diagnostics:
        logger.warning(f"{len(diagnostics)} seeds did not close to a face")
    poset = FacePoset.from_faces(faces.values(), diagnostics)
    logger.info(f"Enumerated {len(poset)} faces up to dim {max_dim}")
    return poset


def skeleton(poset: FacePoset, r: int) -> FacePoset:
    """Return {t : rank(t) <= r} with the restricted order."""
    return poset._restrict(f for f in poset.faces if f.rank <= r)


def lower_ideal(poset: FacePoset, s: Face) -> FacePoset:
    """Return {t : t < s} with the restricted order."""
    if s not in poset:
        raise PreconditionError("Face is not an element of the poset")
    return poset._restrict(f for f in poset.faces if FacePoset.less(f, s))


def face_subgraph(graph: GKMGraph, face: Face) -> GKMGraph:
    """Return the face as a GKM graph in its own right, keeping ambient weights."""
    darts = {d: graph.dart(d) for d in sorted(face.darts)}
    connection = None
    if graph.connection is not None:
        maps = {}
        for d, dart in darts.items():
            local = face.star(graph, dart.source)
            maps[d] = {e: graph.connection.transport(d, e) for e in local}
        connection = Connection(maps)
    return GKMGraph(
        torus_rank=graph.torus_rank,
        dimension=face.dim,
        vertices=tuple(sorted(face.vertices)),
        darts=darts,
        connection=connection,
    )
