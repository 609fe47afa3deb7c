"""Surjectivity of the restriction H*_T(graph) -> H*_T(face), degree by degree."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..faces.face import Face
from ..faces.poset import face_subgraph
from ..gkm.connection import independence_level
from ..gkm.errors import PreconditionError
from ..gkm.linalg import sparse_rank
from ..gkm.model import GKMGraph
from .gkm_classes import DegreeLayout, solve_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RestrictionDegree:
    """Ranks of the restriction map in one cohomological degree.

    Attributes:
        degree: Cohomological degree 2d
        source_dim: dim H^{2d}_T of the graph
        target_dim: dim H^{2d}_T of the face
        image_dim: Rank of the restriction
        generated_dim: Rank of the image plus H^+(BT) times lower-degree
            classes of the face; equal to target_dim iff the restriction is
            onto the ordinary cohomology of the face in this degree
    """

    degree: int
    source_dim: int
    target_dim: int
    image_dim: int
    generated_dim: int

    @property
    def surjective(self) -> bool:
        return self.image_dim == self.target_dim

    @property
    def surjective_on_generators(self) -> bool:
        return self.generated_dim == self.target_dim

    def to_document(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "image_dim": self.image_dim,
            "generated_dim": self.generated_dim,
            "surjective": self.surjective,
            "surjective_on_generators": self.surjective_on_generators,
        }


@dataclass
class RestrictionReport:
    face_vertices: List[str]
    degrees: List[RestrictionDegree] = field(default_factory=list)

    def to_document(self) -> Dict[str, object]:
        return {
            "face": self.face_vertices,
            "degrees": [d.to_document() for d in self.degrees],
        }


def _restrict(
    vectors: List[Dict[int, int]], source: DegreeLayout, target: DegreeLayout
) -> List[Dict[int, int]]:
    width = len(source.monomials)
    position = {p: i for i, p in enumerate(target.vertices)}
    restricted = []
    for vector in vectors:
        image = {}
        for column, value in vector.items():
            p = source.vertices[column // width]
            if p in position:
                image[target.column(position[p], column % width)] = value
        restricted.append(image)
    return restricted


def _multiply_by_coordinates(
    vectors: List[Dict[int, int]], lower: DegreeLayout, target: DegreeLayout
) -> List[Dict[int, int]]:
    width = len(lower.monomials)
    index = {m: i for i, m in enumerate(target.monomials)}
    k = len(target.monomials[0])
    products = []
    for vector in vectors:
        for i in range(k):
            product = {}
            for column, value in vector.items():
                monomial = list(lower.monomials[column % width])
                monomial[i] += 1
                product[target.column(column // width, index[tuple(monomial)])] = value
            products.append(product)
    return products


def restriction_surjectivity(graph: GKMGraph, face: Face, max_degree: int) -> RestrictionReport:
    """Compare the restriction image with H*_T of the face in every even degree <= max_degree.

    Args:
        graph: The ambient graph
        face: A face whose subgraph is itself a GKM graph
        max_degree: Cohomological cutoff

    Raises:
        PreconditionError: If the face subgraph is not 2-independent
    """
    sub = face_subgraph(graph, face)
    if face.dim and independence_level(sub) < min(2, face.dim):
        raise PreconditionError("Face subgraph is not 2-independent")

    k = graph.torus_rank
    report = RestrictionReport(sorted(face.vertices))
    lower: Optional[tuple] = None
    for d in range(max_degree // 2 + 1):
        source_layout, source_kernel = solve_degree(graph.vertices, graph.edges(), k, d)
        target_layout, target_kernel = solve_degree(sub.vertices, sub.edges(), k, d)
        rows = _restrict(source_kernel, source_layout, target_layout)
        shape = (len(rows), target_layout.size)
        image_dim = sparse_rank(dict(enumerate(rows)), shape)

        generated_dim = image_dim
        if lower is not None:
            rows = rows + _multiply_by_coordinates(lower[1], lower[0], target_layout)
            generated_dim = sparse_rank(dict(enumerate(rows)), (len(rows), target_layout.size))
        lower = (target_layout, target_kernel)

        entry = RestrictionDegree(
            2 * d, len(source_kernel), len(target_kernel), image_dim, generated_dim
        )
        logger.debug(f"Restriction in degree {2 * d}: {image_dim}/{len(target_kernel)}")
        report.degrees.append(entry)
    return report
