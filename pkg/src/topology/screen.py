"""Acyclicity screen for face posets of GKM graphs.

For a graph of an equivariantly formal manifold with j-independent
action, every skeleton S_r (r <= j-1) of the face poset is
min(dim S_r - 1, j+1)-acyclic, and so is every lower ideal S_<s of a face
s of dimension <= j-1. A failed check rules out such a realization.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..faces.poset import FacePoset, enumerate_faces, lower_ideal, skeleton
from ..gkm.connection import ensure_connection, independence_level
from ..gkm.model import GKMGraph
from .complex import order_complex
from .homology import BettiVector, is_t_acyclic, reduced_betti

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScreenCheck:
    """One acyclicity check.

    Attributes:
        object: ``skeleton:r`` or ``ideal:<face id>``
        target_t: Required acyclicity degree
        betti: Reduced Betti numbers of the order complex
        passed: Whether b~_i = 0 for 0 <= i <= target_t
    """

    object: str
    target_t: int
    betti: BettiVector
    passed: bool

    def to_document(self) -> Dict[str, Any]:
        return {
            "object": self.object,
            "target_t": self.target_t,
            "betti": list(self.betti),
            "pass": self.passed,
        }


@dataclass
class ScreenReport:
    """Outcome of the realizability screen."""

    independence: int
    max_face_dim: int
    face_counts: Dict[int, int]
    checks: List[ScreenCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[ScreenCheck]:
        return [check for check in self.checks if not check.passed]

    def to_document(self) -> Dict[str, Any]:
        return {
            "independence": self.independence,
            "max_face_dim": self.max_face_dim,
            "face_counts": {str(d): c for d, c in sorted(self.face_counts.items())},
            "checks": [check.to_document() for check in self.checks],
            "notes": list(self.notes),
            "pass": self.passed,
        }


def _check(name: str, poset: FacePoset, j: int) -> ScreenCheck:
    complex_ = order_complex(poset)
    betti = reduced_betti(complex_)
    target = min(complex_.dim - 1, j + 1)
    passed = is_t_acyclic(betti, target)
    if not passed:
        logger.warning(f"Screen check {name} failed: betti {tuple(betti)}, target {target}")
    return ScreenCheck(name, target, betti, passed)


def realizability_screen(
    graph: GKMGraph,
    max_face_dim: Optional[int] = None,
    poset: Optional[FacePoset] = None,
) -> Tuple[ScreenReport, FacePoset]:
    """Run every skeleton and lower-ideal acyclicity check.

    Args:
        graph: Graph with a supplied or computable connection
        max_face_dim: Largest face dimension to enumerate; defaults to j-1
        poset: Previously enumerated faces to reuse

    Returns:
        The report and the face poset it was computed on
    """
    graph = ensure_connection(graph)
    j = independence_level(graph)
    limit = max(j - 1, 0) if max_face_dim is None else min(max_face_dim, graph.dimension)
    if poset is None:
        poset = enumerate_faces(graph, limit)

    report = ScreenReport(independence=j, max_face_dim=limit, face_counts=poset.counts())
    if j < 3:
        report.notes.append(
            f"independence level {j} < 3: acyclicity is only guaranteed for j >= 3"
        )
    if poset.diagnostics:
        report.notes.append(f"{len(poset.diagnostics)} seeds did not close to a face")

    for r in range(0, min(j, limit + 1)):
        report.checks.append(_check(f"skeleton:{r}", skeleton(poset, r), j))
    for face in poset.faces:
        if face.dim <= j - 1:
            name = f"ideal:{poset.face_id(face)}"
            report.checks.append(_check(name, lower_ideal(poset, face), j))

    logger.info(
        f"Screen: {len(report.checks)} checks, {len(report.failures())} failed "
        f"(j={j}, faces up to dim {limit})"
    )
    return report, poset
