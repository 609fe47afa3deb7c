"""GKM classes and the graded linear systems that compute H*_T of a graph.

In polynomial degree d the unknowns are the coefficients of phi(p) on the
degree-d monomials, one block per vertex. Each edge pq contributes the
equations L(phi(p) - phi(q)) = 0, where L reduces modulo the edge weight;
the kernel is exactly the degree-2d part of the GKM ring.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Mapping, Sequence, Tuple

from ..gkm.connection import independence_level
from ..gkm.errors import CongruenceError, PreconditionError
from ..gkm.linalg import sparse_nullspace, sparse_rank
from ..gkm.model import Dart, GKMGraph
from .polynomials import (
    Monomial,
    PolynomialQ,
    divides,
    from_vector,
    monomials,
    polynomial_ring,
    weight_quotient,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GKMClass:
    """A vertex-wise polynomial, homogeneous of polynomial degree ``degree``.

    Attributes:
        degree: Polynomial degree d (cohomological degree 2d)
        values: Polynomial at every vertex
    """

    degree: int
    values: Mapping[str, PolynomialQ]

    def congruence_failures(self, graph: GKMGraph) -> List[str]:
        """Return the edges pq where alpha(pq) does not divide value(p) - value(q)."""
        failures = []
        for dart in graph.edges():
            difference = self.values[dart.source] - self.values[dart.target]
            if not divides(dart.weight.entries, difference):
                failures.append(dart.edge)
        return failures

    def check(self, graph: GKMGraph) -> None:
        failures = self.congruence_failures(graph)
        if failures:
            raise CongruenceError("Class violates the GKM congruence", failures[0])


@dataclass(frozen=True)
class DegreeLayout:
    """Column layout of the degree-d system: vertex blocks of monomials."""

    vertices: Tuple[str, ...]
    monomials: Tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.vertices) * len(self.monomials)

    def column(self, vertex_index: int, monomial_index: int) -> int:
        return vertex_index * len(self.monomials) + monomial_index


def gkm_system(
    vertices: Sequence[str], edges: Sequence[Dart], k: int, d: int
) -> Tuple[Dict[int, Dict[int, object]], Tuple[int, int], DegreeLayout]:
    """Build the sparse degree-d congruence system.

    Args:
        vertices: Vertex ids, in column order
        edges: One dart per undirected edge
        k: Torus rank
        d: Polynomial degree

    Returns:
        (rows, shape, layout)
    """
    layout = DegreeLayout(tuple(vertices), monomials(k, d))
    position = {p: i for i, p in enumerate(layout.vertices)}
    rows: Dict[int, Dict[int, object]] = {}
    for dart in edges:
        quotient = weight_quotient(dart.weight.entries)
        p, q = position[dart.source], position[dart.target]
        local: Dict[Monomial, Dict[int, object]] = {}
        for mi, monomial in enumerate(layout.monomials):
            for image, coeff in quotient.monomial_image(monomial).items():
                row = local.setdefault(image, {})
                row[layout.column(p, mi)] = coeff
                row[layout.column(q, mi)] = -coeff
        for image in sorted(local):
            rows[len(rows)] = local[image]
    return rows, (len(rows), layout.size), layout


def solve_degree(
    vertices: Sequence[str], edges: Sequence[Dart], k: int, d: int
) -> Tuple[DegreeLayout, List[Dict[int, int]]]:
    """Return the layout and an integer kernel basis of the degree-d system."""
    rows, shape, layout = gkm_system(vertices, edges, k, d)
    return layout, sparse_nullspace(rows, shape)


def degree_dimension(vertices: Sequence[str], edges: Sequence[Dart], k: int, d: int) -> int:
    rows, shape, _ = gkm_system(vertices, edges, k, d)
    return shape[1] - sparse_rank(rows, shape)


def recover_betti(dims: Sequence[int], k: int) -> List[int]:
    """Deconvolve graded dimensions by 1/(1-t^2)^k.

    Multiplying the Hilbert series by (1-t^2)^k gives the ordinary Betti
    numbers b_0, b_2, ... of a free H*(BT)-module.
    """
    return [
        sum((-1) ** i * comb(k, i) * dims[d - i] for i in range(0, min(d, k) + 1))
        for d in range(len(dims))
    ]


@dataclass(frozen=True)
class GradedDims:
    """dim H^{2d}_T for d = 0..len(dims)-1, plus the free-module consistency check."""

    dims: Tuple[int, ...]
    torus_rank: int

    def by_degree(self) -> Dict[int, int]:
        return {2 * d: dim for d, dim in enumerate(self.dims)}

    @property
    def betti(self) -> List[int]:
        return recover_betti(self.dims, self.torus_rank)

    @property
    def free_module_consistent(self) -> bool:
        return all(b >= 0 for b in self.betti)

    @property
    def top_degree(self) -> int:
        """Largest d with b_d != 0, or -1."""
        nonzero = [d for d, b in enumerate(self.betti) if b]
        return nonzero[-1] if nonzero else -1

    @property
    def symmetric(self) -> bool:
        betti = self.betti
        top = self.top_degree
        return all(betti[d] == betti[top - d] for d in range(top + 1))

    def to_document(self) -> Dict[str, object]:
        return {
            "dims": {str(deg): dim for deg, dim in self.by_degree().items()},
            "betti": self.betti,
            "free_module_consistent": self.free_module_consistent,
            "top_degree": 2 * self.top_degree,
            "symmetric": self.symmetric,
        }


def _check_gkm_condition(graph: GKMGraph) -> None:
    j = independence_level(graph)
    if j < min(2, graph.dimension):
        raise PreconditionError(f"GKM condition fails: independence level {j} < 2")


def gkm_cohomology_dims(graph: GKMGraph, max_degree: int) -> GradedDims:
    """Return dim H^{2d}_T(graph) for every even degree 2d <= max_degree."""
    _check_gkm_condition(graph)
    edges = graph.edges()
    dims = []
    for d in range(max_degree // 2 + 1):
        dims.append(degree_dimension(graph.vertices, edges, graph.torus_rank, d))
        logger.debug(f"dim H^{2 * d}_T = {dims[-1]}")
    logger.info(f"GKM dims up to degree {max_degree}: {dims}")
    return GradedDims(tuple(dims), graph.torus_rank)


def gkm_cohomology_basis(graph: GKMGraph, d: int) -> List[GKMClass]:
    """Return a basis of H^{2d}_T(graph) as GKM classes."""
    _check_gkm_condition(graph)
    layout, kernel = solve_degree(graph.vertices, graph.edges(), graph.torus_rank, d)
    width = len(layout.monomials)
    basis = []
    for vector in kernel:
        values = {}
        for vi, p in enumerate(layout.vertices):
            coefficients = [vector.get(vi * width + mi, 0) for mi in range(width)]
            values[p] = from_vector(graph.torus_rank, d, coefficients)
        basis.append(GKMClass(d, values))
    return basis


def constant_class(graph: GKMGraph, value: int = 1) -> GKMClass:
    R = polynomial_ring(graph.torus_rank)
    return GKMClass(0, {p: R(value) for p in graph.vertices})
