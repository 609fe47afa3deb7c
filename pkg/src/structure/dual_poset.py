"""Dual simplicial poset of a graph with facets."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..faces.face import Face, whole_graph_face
from ..faces.poset import FacePoset, enumerate_faces
from ..gkm.errors import BooleanIntervalViolation, PreconditionError
from ..gkm.model import GKMGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualSimplicialPoset:
    """Faces under reverse inclusion, ranked by codimension.

    Attributes:
        elements: Element ids, ordered by rank and then canonically; the
            bottom element comes first
        rank: Rank of every element
        below: Strict lower set of every element in the dual order
        faces: The face behind every element, when built from a graph
    """

    elements: Tuple[str, ...]
    rank: Mapping[str, int]
    below: Mapping[str, FrozenSet[str]]
    faces: Mapping[str, Face] = field(default_factory=dict)

    @property
    def bottom(self) -> str:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def counts_by_rank(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for element in self.elements:
            counts[self.rank[element]] = counts.get(self.rank[element], 0) + 1
        return dict(sorted(counts.items()))

    def atoms_below(self, element: str) -> FrozenSet[str]:
        return frozenset(a for a in self.below[element] if self.rank[a] == 1)

    def check_boolean_intervals(self) -> None:
        """Verify that every lower interval [bottom, x] is a boolean lattice.

        The interval below x of rank r must have 2^r elements, each
        determined by the atoms below it, with order matching inclusion of
        atom sets.

        Raises:
            BooleanIntervalViolation: On the first interval that is not boolean
        """
        atoms = {x: self.atoms_below(x) for x in self.elements}
        for x in self.elements:
            if self.rank[x] == 1:
                atoms[x] = frozenset([x])
        for x in self.elements:
            r = self.rank[x]
            interval = sorted(self.below[x] | {x})
            if len(atoms[x]) != r:
                raise BooleanIntervalViolation(x, f"{len(atoms[x])} atoms for rank {r}")
            if len(interval) != 2**r:
                raise BooleanIntervalViolation(x, f"{len(interval)} elements for rank {r}")
            seen: Dict[FrozenSet[str], str] = {}
            for y in interval:
                if len(atoms[y]) != self.rank[y]:
                    raise BooleanIntervalViolation(x, f"{y} has rank {self.rank[y]}")
                if atoms[y] in seen:
                    raise BooleanIntervalViolation(x, f"{y} and {seen[atoms[y]]} share atoms")
                seen[atoms[y]] = y
            for y, z in combinations(interval, 2):
                comparable = y in self.below[z] or z in self.below[y]
                nested = atoms[y] <= atoms[z] or atoms[z] <= atoms[y]
                if comparable != nested:
                    raise BooleanIntervalViolation(x, f"order of {y}, {z} differs from atoms")

    @classmethod
    def from_simplices(cls, simplices: Iterable[Sequence[str]]) -> "DualSimplicialPoset":
        """Build the face poset of a simplicial complex, empty simplex at the bottom.

        Args:
            simplices: Maximal simplices given by vertex labels
        """
        closed = {frozenset()}
        for simplex in simplices:
            for size in range(1, len(simplex) + 1):
                closed.update(frozenset(c) for c in combinations(simplex, size))
        ordered = sorted(closed, key=lambda s: (len(s), sorted(s)))
        name = {s: ",".join(sorted(s)) for s in ordered}
        return cls(
            elements=tuple(name[s] for s in ordered),
            rank={name[s]: len(s) for s in ordered},
            below={name[s]: frozenset(name[t] for t in ordered if t < s) for s in ordered},
        )


def build_dual_simplicial_poset(
    graph: GKMGraph,
    facets: List[Face],
    faces: Optional[FacePoset] = None,
) -> DualSimplicialPoset:
    """Assemble faces of dim <= n-2, the facets and the whole graph under reverse inclusion.

    Args:
        graph: Graph with facets
        facets: Facets, for example from a balanced coloring
        faces: Previously enumerated faces of dim <= n-2

    Raises:
        BooleanIntervalViolation: If some lower interval is not boolean
    """
    n = graph.dimension
    if graph.connection is None:
        raise PreconditionError("Dual poset needs a connection")
    if faces is None:
        faces = enumerate_faces(graph, max(n - 2, 0), include_top=True, extra=facets)
    else:
        faces = _merge_faces(faces, graph, facets)

    ordered = sorted(faces.faces, key=lambda f: (n - f.dim, f.sort_key))
    ids = [faces.ids[f.key] for f in ordered]
    below = {
        faces.ids[a.key]: frozenset(faces.ids[b.key] for b in ordered if FacePoset.less(a, b))
        for a in ordered
    }
    poset = DualSimplicialPoset(
        elements=tuple(ids),
        rank={faces.ids[f.key]: n - f.dim for f in ordered},
        below=below,
        faces={faces.ids[f.key]: f for f in ordered},
    )
    poset.check_boolean_intervals()
    logger.info(f"Dual simplicial poset: rank counts {poset.counts_by_rank()}")
    return poset


def _merge_faces(faces: FacePoset, graph: GKMGraph, facets: List[Face]) -> FacePoset:
    kept = [f for f in faces.faces if f.dim <= graph.dimension - 2]
    kept += list(facets) + [whole_graph_face(graph)]
    return FacePoset.from_faces(kept, faces.diagnostics)
