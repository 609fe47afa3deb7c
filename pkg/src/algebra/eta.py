"""The degree-2 linear form eta = sum_G c_G tau_G over facets."""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ

from ..faces.face import Face, FaceKey
from ..gkm.connection import independence_level
from ..gkm.errors import InconsistentEtaError, PreconditionError, ZeroCoefficientError
from ..gkm.linalg import kernel_of_columns
from ..gkm.model import GKMGraph
from .polynomials import PolynomialQ, format_rational, polynomial_ring
from .thom import thom_class

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EtaForm:
    """Facet coefficients of eta, normalized so the first facet has coefficient 1.

    Attributes:
        facets: Facets in canonical order
        coefficients: Coefficient of each facet, aligned with ``facets``
    """

    facets: Tuple[Face, ...]
    coefficients: Tuple[Fraction, ...]

    def coefficient(self, facet: Face) -> Fraction:
        return self.coefficients[[f.key for f in self.facets].index(facet.key)]

    def value_at(self, graph: GKMGraph, p: str) -> PolynomialQ:
        """Return sum_G c_G tau_G(p)."""
        total = polynomial_ring(graph.torus_rank).zero
        for facet, c in zip(self.facets, self.coefficients):
            if p in facet.vertices:
                tau = thom_class(graph, facet, check=False)
                total += tau.values[p] * QQ(c.numerator, c.denominator)
        return total

    def to_document(self, ids: Optional[Dict[FaceKey, str]] = None) -> List[Dict[str, object]]:
        return [
            {
                "facet": ids[f.key] if ids else sorted(f.vertices),
                "coefficient": format_rational(c),
            }
            for f, c in zip(self.facets, self.coefficients)
        ]


def _transversal_facets(graph: GKMGraph, facets: Sequence[Face], p: str) -> Dict[str, int]:
    """Map each dart at p to the index of the facet through p missing it."""
    result: Dict[str, int] = {}
    for index, facet in enumerate(facets):
        if p not in facet.vertices:
            continue
        missing = facet.transversal(graph, p)
        if len(missing) != 1:
            raise PreconditionError(f"Face {index} is not a facet at {p}")
        if missing[0] in result:
            raise PreconditionError(f"Two facets at {p} miss dart {missing[0]}")
        result[missing[0]] = index
    if len(result) != graph.dimension:
        raise PreconditionError(
            f"Vertex {p} lies on {len(result)} facets, expected {graph.dimension}"
        )
    return result


def _local_relation(graph: GKMGraph, facets: Sequence[Face], p: str) -> Dict[int, Fraction]:
    """Return the linear relation among the weights at p, keyed by transversal facet."""
    star = graph.star(p)
    kernel = kernel_of_columns([list(graph.weight(d).entries) for d in star])
    if len(kernel) != 1:
        raise InconsistentEtaError(f"Weights at {p} satisfy {len(kernel)} independent relations")
    transversal = _transversal_facets(graph, facets, p)
    return {transversal[d]: Fraction(c) for d, c in zip(star, kernel[0])}


def compute_eta(graph: GKMGraph, facets: Sequence[Face]) -> EtaForm:
    """Solve for the facet coefficients of eta and verify phi(eta) = 0.

    At each vertex the n weights satisfy a unique linear relation; its
    coefficient on a weight belongs to the facet transversal to that weight.
    Relations are scaled along a breadth-first walk to agree on shared
    facets, then normalized.

    Raises:
        PreconditionError: Outside complexity one in general position
        InconsistentEtaError: If local relations disagree on a shared facet
        ZeroCoefficientError: If some facet receives coefficient zero
    """
    n, k = graph.dimension, graph.torus_rank
    j = independence_level(graph)
    if k != n - 1 or j != n - 1 or j < 2:
        raise PreconditionError(
            f"eta needs complexity one in general position (k={k}, n={n}, j={j})"
        )
    if not facets:
        raise PreconditionError("eta needs facets")
    facets = sorted(facets, key=lambda f: f.sort_key)

    coefficients: Dict[int, Fraction] = {}
    root = graph.vertices[0]
    seen = {root}
    queue = deque([root])
    while queue:
        p = queue.popleft()
        local = _local_relation(graph, facets, p)
        shared = [i for i in sorted(local) if i in coefficients]
        if shared:
            anchor = shared[0]
            if local[anchor] == 0:
                raise ZeroCoefficientError(f"Facet {anchor} has coefficient 0 at {p}")
            scale = coefficients[anchor] / local[anchor]
        else:
            scale = Fraction(1)
        for i, c in sorted(local.items()):
            value = c * scale
            if i in coefficients and coefficients[i] != value:
                raise InconsistentEtaError(
                    f"Facet {i} gets {coefficients[i]} and {value} (at vertex {p})"
                )
            coefficients[i] = value
        for d in graph.star(p):
            q = graph.dart(d).target
            if q not in seen:
                seen.add(q)
                queue.append(q)

    missing = [i for i in range(len(facets)) if i not in coefficients]
    if missing:
        raise PreconditionError(f"Facets {missing} contain no vertex")
    zero = [i for i, c in coefficients.items() if c == 0]
    if zero:
        raise ZeroCoefficientError(f"Facet {zero[0]} has coefficient 0")

    first = coefficients[0]
    eta = EtaForm(tuple(facets), tuple(coefficients[i] / first for i in range(len(facets))))
    for p in graph.vertices:
        if eta.value_at(graph, p):
            raise InconsistentEtaError(f"sum c_G tau_G does not vanish at {p}")
    logger.info(f"eta computed on {len(facets)} facets")
    return eta
