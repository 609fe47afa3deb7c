"""Abstract simplicial complexes and order complexes of face posets."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from ..faces.poset import FacePoset

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplexAbstract:
    """A finite simplicial complex on an ordered vertex list.

    Simplices are stored as increasing tuples of vertex positions, grouped
    by dimension. The vertex order fixes simplex orientations.

    Attributes:
        vertices: Vertex labels in orientation order
        simplices: ``simplices[i]`` lists the i-simplices in lexicographic order
    """

    vertices: Tuple[Hashable, ...]
    simplices: Tuple[Tuple[Simplex, ...], ...]

    @property
    def dim(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return len(self.simplices) - 1

    def f_vector(self) -> List[int]:
        return [len(level) for level in self.simplices]

    def __len__(self) -> int:
        return sum(self.f_vector())

    def all_simplices(self) -> List[Simplex]:
        return [s for level in self.simplices for s in level]

    def is_closed(self) -> bool:
        """Return True if every face of every simplex is present."""
        present = set(self.all_simplices())
        for simplex in present:
            if len(simplex) > 1 and any(
                face not in present for face in combinations(simplex, len(simplex) - 1)
            ):
                return False
        return all((i,) in present for i in range(len(self.vertices)))

    def euler_characteristic(self, reduced: bool = True) -> int:
        chi = sum((-1) ** i * count for i, count in enumerate(self.f_vector()))
        return chi - 1 if reduced else chi

    @classmethod
    def from_simplices(
        cls, maximal: Iterable[Sequence[Hashable]], vertices: Sequence[Hashable] = ()
    ) -> "SimplicialComplexAbstract":
        """Close a list of simplices under taking faces.

        Args:
            maximal: Simplices given by vertex labels
            vertices: Optional vertex order; defaults to sorted labels
        """
        maximal = [tuple(s) for s in maximal]
        labels = list(vertices) or sorted({v for s in maximal for v in s})
        position = {v: i for i, v in enumerate(labels)}
        closed = set((i,) for i in range(len(labels)))
        for simplex in maximal:
            indices = tuple(sorted(position[v] for v in simplex))
            for size in range(1, len(indices) + 1):
                closed.update(combinations(indices, size))
        return cls._from_set(tuple(labels), closed)

    @classmethod
    def _from_set(
        cls, labels: Tuple[Hashable, ...], closed: Iterable[Simplex]
    ) -> "SimplicialComplexAbstract":
        levels: Dict[int, List[Simplex]] = {}
        for simplex in closed:
            levels.setdefault(len(simplex) - 1, []).append(simplex)
        top = max(levels, default=-1)
        return cls(labels, tuple(tuple(sorted(levels.get(i, []))) for i in range(top + 1)))


def order_complex(poset: FacePoset) -> SimplicialComplexAbstract:
    """Return the complex of all nonempty chains of ``poset``.

    Vertices are the face ids in the poset's canonical order, which is a
    linear extension of inclusion.
    """
    faces = poset.faces
    above: List[List[int]] = [
        [j for j in range(i + 1, len(faces)) if FacePoset.less(faces[i], faces[j])]
        for i in range(len(faces))
    ]

    chains: List[Simplex] = []
    stack: List[Simplex] = [(i,) for i in range(len(faces) - 1, -1, -1)]
    while stack:
        chain = stack.pop()
        chains.append(chain)
        last = chain[-1]
        for j in reversed(above[last]):
            stack.append(chain + (j,))

    complex_ = SimplicialComplexAbstract._from_set(tuple(poset.face_id(f) for f in faces), chains)
    logger.debug(f"Order complex: f-vector {complex_.f_vector()}")
    return complex_
