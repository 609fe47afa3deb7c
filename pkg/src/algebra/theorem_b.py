"""Degree-by-degree check that H*_T of a graph with facets is the face ring modulo eta.

For complexity one in general position the face ring R of the dual
simplicial poset is Cohen-Macaulay and eta is a regular element of
degree 2, so Hilb(R/eta) = (1 - t^2) Hilb(R). This is compared with the
dimensions of the GKM ring computed by linear algebra, together with the
numeric consequences for the ordinary Betti numbers.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional

from ..gkm.connection import ensure_connection, independence_level
from ..gkm.errors import GKMError
from ..gkm.model import GKMGraph
from ..structure.coloring import BalancedColoring, balanced_coloring
from ..structure.dual_poset import DualSimplicialPoset, build_dual_simplicial_poset
from ..structure.facets import facets_from_coloring, has_facets
from .eta import EtaForm, compute_eta
from .gkm_classes import GradedDims, gkm_cohomology_dims
from .hilbert import HilbertSeries, face_ring_hilbert
from .polynomials import format_rational
from .thom import ThomRelationsReport, verify_thom_relations

logger = logging.getLogger(__name__)


def default_max_degree(graph: GKMGraph) -> int:
    return 2 * graph.dimension + 4


@dataclass
class TheoremBReport:
    """Both sides of the face-ring description and the derived checks."""

    applicable: bool
    max_degree: int
    reasons: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    facet_count: int = 0
    dual_poset: Optional[DualSimplicialPoset] = None
    quotient_series: Optional[HilbertSeries] = None
    gkm: Optional[GradedDims] = None
    eta: Optional[EtaForm] = None
    thom: Optional[ThomRelationsReport] = None
    vertex_count: int = 0
    dimension: int = 0

    def degree_matches(self) -> Dict[int, bool]:
        if self.quotient_series is None or self.gkm is None:
            return {}
        return {
            2 * d: self.quotient_series.coefficients[d] == dim
            for d, dim in enumerate(self.gkm.dims)
        }

    @property
    def betti(self) -> List[int]:
        return self.gkm.betti if self.gkm is not None else []

    @property
    def symmetric(self) -> bool:
        n = self.dimension
        betti = self.betti
        padded = betti + [0] * max(0, n + 1 - len(betti))
        return all(padded[d] == padded[n - d] for d in range(n + 1)) and not any(
            padded[n + 1:]
        )

    @property
    def total_matches(self) -> bool:
        return sum(self.betti) == self.vertex_count

    @property
    def passed(self) -> bool:
        return (
            self.applicable
            and not self.errors
            and all(self.degree_matches().values())
            and self.gkm is not None
            and self.gkm.free_module_consistent
            and self.symmetric
            and self.total_matches
            and (self.thom is None or self.thom.passed)
        )

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "applicable": self.applicable,
            "max_degree": self.max_degree,
            "reasons": list(self.reasons),
        }
        if not self.applicable:
            return doc
        quotient: Dict[int, str] = {}
        if self.quotient_series is not None:
            quotient = {
                deg: format_rational(c) for deg, c in self.quotient_series.by_degree().items()
            }
        doc.update(
            {
                "errors": list(self.errors),
                "facet_count": self.facet_count,
                "degrees": [
                    {
                        "degree": deg,
                        "face_ring_quotient": quotient.get(deg),
                        "gkm": self.gkm.dims[deg // 2] if self.gkm is not None else None,
                        "match": match,
                    }
                    for deg, match in self.degree_matches().items()
                ],
                "betti": self.betti,
                "symmetric": self.symmetric,
                "total": sum(self.betti),
                "vertex_count": self.vertex_count,
                "pass": self.passed,
            }
        )
        if self.quotient_series is not None:
            doc["h_vector"] = list(self.quotient_series.h_vector() or ())
        if self.eta is not None:
            ids = None
            if self.dual_poset is not None:
                ids = {face.key: name for name, face in self.dual_poset.faces.items()}
            doc["eta"] = self.eta.to_document(ids)
        if self.thom is not None:
            doc["thom_relations"] = self.thom.to_document()
        return doc


def applicability(graph: GKMGraph) -> List[str]:
    """Return the reasons the face-ring description does not apply (empty if it does)."""
    n, k = graph.dimension, graph.torus_rank
    j = independence_level(graph)
    reasons = []
    if k != n - 1:
        reasons.append(f"torus rank {k} is not n-1 = {n - 1} (complexity is not one)")
    if j != n - 1:
        reasons.append(f"independence level {j} is not n-1 = {n - 1}")
    if j < 2:
        reasons.append(f"independence level {j} is below 2 (GKM condition)")
    if not isinstance(balanced_coloring(graph), BalancedColoring):
        reasons.append("no balanced coloring exists")
    if not has_facets(graph):
        reasons.append("graph has no facets")
    return reasons


def verify_theorem_b(graph: GKMGraph, max_degree: Optional[int] = None) -> TheoremBReport:
    """Compare (1 - t^2) Hilb(face ring) with dim H*_T degree by degree.

    Args:
        graph: Graph with supplied or computable connection
        max_degree: Cohomological cutoff; defaults to 2n + 4

    Returns:
        The report; mismatches and failed checks are recorded, not raised
    """
    graph = ensure_connection(graph)
    cutoff = default_max_degree(graph) if max_degree is None else max_degree
    report = TheoremBReport(
        applicable=False,
        max_degree=cutoff,
        vertex_count=len(graph.vertices),
        dimension=graph.dimension,
    )
    report.reasons = applicability(graph)
    if report.reasons:
        logger.info(f"Face-ring description inapplicable: {'; '.join(report.reasons)}")
        return report
    report.applicable = True

    coloring = balanced_coloring(graph)
    assert isinstance(coloring, BalancedColoring)
    facets = facets_from_coloring(graph, coloring)
    report.facet_count = len(facets)

    try:
        report.dual_poset = build_dual_simplicial_poset(graph, facets)
        report.quotient_series = face_ring_hilbert(report.dual_poset, cutoff).times_one_minus_u()
    except GKMError as e:
        report.errors.append(f"dual poset: {e}")
    try:
        report.eta = compute_eta(graph, facets)
    except GKMError as e:
        report.errors.append(f"eta: {e}")

    report.gkm = gkm_cohomology_dims(graph, cutoff)

    if report.dual_poset is not None:
        family = list(report.dual_poset.faces.values())
        pairs = list(combinations_with_replacement(facets, 2))
        try:
            report.thom = verify_thom_relations(graph, family, pairs)
        except GKMError as e:
            report.errors.append(f"thom relations: {e}")

    logger.info(f"Face-ring verification up to degree {cutoff}: pass={report.passed}")
    return report
