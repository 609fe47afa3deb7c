"""Thom classes of faces and the multiplicative relations between them."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..faces.face import Face, FaceKey
from ..gkm.errors import FaceFamilyError, JoinUndefinedError, PreconditionError
from ..gkm.model import GKMGraph
from .gkm_classes import GKMClass
from .polynomials import linear_form, polynomial_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThomClass(GKMClass):
    """tau_F: the product of transversal weights on F, zero off F."""

    face: Optional[Face] = None


def thom_class(graph: GKMGraph, face: Face, check: bool = True) -> ThomClass:
    """Compute tau_F and verify that it satisfies the GKM congruences.

    Raises:
        CongruenceError: If the class is not a GKM class
    """
    R = polynomial_ring(graph.torus_rank)
    values = {}
    for p in graph.vertices:
        if p in face.vertices:
            value = R.one
            for d in face.transversal(graph, p):
                value *= linear_form(graph.weight(d).entries)
            values[p] = value
        else:
            values[p] = R.zero
    tau = ThomClass(graph.dimension - face.dim, values, face)
    if check:
        tau.check(graph)
    return tau


@dataclass
class ThomRelationsReport:
    """Outcome of checking tau_F tau_H = tau_{F v H} sum_E tau_E for pairs in a family."""

    pairs_checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_document(self) -> Dict[str, Any]:
        return {
            "pairs_checked": self.pairs_checked,
            "failures": list(self.failures),
            "pass": self.passed,
        }


def intersection_components(
    graph: GKMGraph, f: Face, h: Face
) -> List[Tuple[frozenset, frozenset]]:
    """Return (vertices, darts) of each connected component of F ∩ H."""
    shared = f.vertices & h.vertices
    darts = f.darts & h.darts
    view = nx.MultiGraph()
    view.add_nodes_from(shared)
    for d in darts:
        dart = graph.dart(d)
        view.add_edge(dart.source, dart.target, key=dart.edge)
    components = []
    for component in nx.connected_components(view):
        local = frozenset(d for d in darts if graph.dart(d).source in component)
        components.append((frozenset(component), local))
    return sorted(components, key=lambda c: (sorted(c[0]), sorted(c[1])))


def face_join(family: Sequence[Face], f: Face, h: Face) -> Optional[Face]:
    """Return the least face of ``family`` containing both, or None."""
    upper = [g for g in family if g.contains(f) and g.contains(h)]
    for candidate in upper:
        if all(g.contains(candidate) for g in upper):
            return candidate
    return None


def verify_thom_relations(
    graph: GKMGraph,
    faces: Sequence[Face],
    pairs: Optional[Sequence[Tuple[Face, Face]]] = None,
) -> ThomRelationsReport:
    """Check the face-ring relations between Thom classes at every common vertex.

    Off F ∩ H both sides vanish, so only vertices of the intersection are
    checked. Pairs with empty intersection hold trivially.

    Args:
        graph: Graph carrying a connection
        faces: The face family, closed under joins and intersection components
        pairs: Pairs to check; defaults to all pairs of the family

    Raises:
        JoinUndefinedError: If intersecting faces have no join in the family
        FaceFamilyError: If a component of an intersection is not in the family
    """
    if graph.connection is None:
        raise PreconditionError("Thom relations need a connection")
    family: Dict[FaceKey, Face] = {f.key: f for f in faces}
    ordered = sorted(family.values(), key=lambda f: f.sort_key)
    if pairs is None:
        pairs = [(f, h) for i, f in enumerate(ordered) for h in ordered[i:]]

    cache: Dict[FaceKey, ThomClass] = {}

    def tau(face: Face) -> ThomClass:
        if face.key not in cache:
            cache[face.key] = thom_class(graph, face)
        return cache[face.key]

    zero = polynomial_ring(graph.torus_rank).zero
    report = ThomRelationsReport()
    for f, h in pairs:
        report.pairs_checked += 1
        components = intersection_components(graph, f, h)
        if not components:
            continue
        join = face_join(ordered, f, h)
        if join is None:
            raise JoinUndefinedError(
                f"Faces on {sorted(f.vertices)} and {sorted(h.vertices)} have no join"
            )
        parts = []
        for vertices, darts in components:
            key = (tuple(sorted(vertices)), tuple(sorted(darts)))
            if key not in family:
                raise FaceFamilyError(f"Component on {sorted(vertices)} is not in the family")
            parts.append(family[key])

        for p in sorted(f.vertices & h.vertices):
            lhs = tau(f).values[p] * tau(h).values[p]
            rhs = tau(join).values[p] * sum((tau(e).values[p] for e in parts), zero)
            if lhs != rhs:
                report.failures.append(
                    {"faces": [sorted(f.vertices), sorted(h.vertices)], "vertex": p}
                )
                break
    logger.info(f"Thom relations: {report.pairs_checked} pairs, {len(report.failures)} failures")
    return report
