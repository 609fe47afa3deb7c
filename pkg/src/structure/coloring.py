"""Balanced colorings by transport of a root coloring along a spanning tree."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

import networkx as nx

from ..gkm.errors import PreconditionError
from ..gkm.model import GKMGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalancedColoring:
    """Edge coloring by 1..n, proper at every vertex and preserved by the connection.

    Attributes:
        color: Color of every undirected edge id
    """

    color: Mapping[str, int]

    def dart_color(self, graph: GKMGraph, dart_id: str) -> int:
        return self.color[graph.dart(dart_id).edge]

    def violations(self, graph: GKMGraph) -> List[Tuple[str, str]]:
        """Return (vertex or dart, edge) pairs where an axiom fails."""
        found: List[Tuple[str, str]] = []
        colors = set(range(1, graph.dimension + 1))
        for p in graph.vertices:
            if {self.dart_color(graph, d) for d in graph.star(p)} != colors:
                found.append((p, ""))
        assert graph.connection is not None
        for dart_id, dart in sorted(graph.darts.items()):
            for e in graph.star(dart.source):
                image = graph.connection.transport(dart_id, e)
                if self.dart_color(graph, image) != self.dart_color(graph, e):
                    found.append((dart_id, graph.dart(e).edge))
        return found

    def to_document(self) -> Dict[str, int]:
        return dict(sorted(self.color.items()))


@dataclass(frozen=True)
class ColoringObstruction:
    """Witness that transported colors disagree.

    Attributes:
        dart: Dart along which the transport check fails
        edge: Edge whose color is not preserved
        expected: Color carried by the edge at the source
        found: Color the target already assigns to the image
        cycle: Closed vertex walk root -> ... -> source -> target -> ... -> root
    """

    dart: str
    edge: str
    expected: int
    found: int
    cycle: Tuple[str, ...]

    def to_document(self) -> Dict[str, object]:
        return {
            "dart": self.dart,
            "edge": self.edge,
            "expected": self.expected,
            "found": self.found,
            "cycle": list(self.cycle),
        }


def _tree_path(parent: Mapping[str, Optional[str]], v: str) -> List[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    return path[::-1]


def balanced_coloring(graph: GKMGraph) -> Union[BalancedColoring, ColoringObstruction]:
    """Try to build a balanced coloring.

    The root (smallest vertex id) colors its star 1..n by dart id. Local
    colorings are transported along a BFS spanning tree and then checked on
    every dart and every connection map.

    Returns:
        The coloring, or an obstruction witness
    """
    if graph.connection is None:
        raise PreconditionError("Balanced coloring needs a connection")
    connection = graph.connection
    root = graph.vertices[0]
    local: Dict[str, Dict[str, int]] = {
        root: {d: i + 1 for i, d in enumerate(graph.star(root))}
    }
    parent: Dict[str, Optional[str]] = {root: None}

    for u, v in nx.bfs_edges(graph.as_networkx(), root):
        tree_dart = min(d for d in graph.star(u) if graph.dart(d).target == v)
        local[v] = {connection.transport(tree_dart, e): c for e, c in local[u].items()}
        parent[v] = u

    for dart_id in sorted(graph.darts):
        dart = graph.dart(dart_id)
        for e in graph.star(dart.source):
            expected = local[dart.source][e]
            found = local[dart.target][connection.transport(dart_id, e)]
            if expected != found:
                cycle = _tree_path(parent, dart.source) + _tree_path(parent, dart.target)[::-1]
                logger.info(f"Coloring obstruction along {dart_id} at edge {graph.dart(e).edge}")
                return ColoringObstruction(
                    dart_id, graph.dart(e).edge, expected, found, tuple(cycle)
                )

    color = {dart.edge: local[dart.source][dart.id] for dart in graph.edges()}
    return BalancedColoring(color)
