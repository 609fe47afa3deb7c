"""Core data model for GKM graphs: weights, darts, connections and graph ingestion."""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import networkx as nx
from pydantic import ValidationError

from .errors import GraphValidationError
from .linalg import collinear_scalar, rank_of_vectors
from .schema import GraphDocument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """An element of the weight lattice Hom(T^k, S^1) = Z^k."""

    entries: Tuple[int, ...]

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-x for x in self.entries))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def as_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class Dart:
    """A directed half of an undirected edge.

    Attributes:
        id: Dart id, ``<edge>+`` for from->to and ``<edge>-`` for to->from
        source: Source vertex id
        target: Target vertex id
        twin: Id of the reversed dart
        weight: Axial value; the twin carries the negated weight
        edge: Id of the undirected edge
    """

    id: str
    source: str
    target: str
    twin: str
    weight: WeightVector
    edge: str


@dataclass(frozen=True)
class Connection:
    """For each dart d = (p->q), a bijection theta_d from star(p) to star(q).

    Attributes:
        maps: ``maps[d][e]`` is the dart theta_d(e)
    """

    maps: Mapping[str, Mapping[str, str]]

    def transport(self, dart: str, edge: str) -> str:
        """Return theta_dart(edge)."""
        return self.maps[dart][edge]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Connection):
            return NotImplemented
        return {d: dict(m) for d, m in self.maps.items()} == {
            d: dict(m) for d, m in other.maps.items()
        }

    def __hash__(self) -> int:
        return hash(tuple(sorted((d, tuple(sorted(m.items()))) for d, m in self.maps.items())))


@dataclass(frozen=True)
class GKMGraph:
    """A finite n-valent graph with axial function and optional connection.

    Attributes:
        torus_rank: Rank k of the torus, the length of every weight
        dimension: Valence n
        vertices: Vertex ids in lexicographic order
        darts: All darts by id; closed under twinning
        connection: Connection, if supplied or computed
    """

    torus_rank: int
    dimension: int
    vertices: Tuple[str, ...]
    darts: Mapping[str, Dart]
    connection: Optional[Connection] = None
    _stars: Dict[str, Tuple[str, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        stars: Dict[str, List[str]] = {p: [] for p in self.vertices}
        for dart in self.darts.values():
            stars.setdefault(dart.source, []).append(dart.id)
        object.__setattr__(self, "_stars", {p: tuple(sorted(ds)) for p, ds in stars.items()})

    def star(self, p: str) -> Tuple[str, ...]:
        """Return the ids of the darts with source ``p``, sorted."""
        return self._stars[p]

    def dart(self, dart_id: str) -> Dart:
        return self.darts[dart_id]

    def weight(self, dart_id: str) -> WeightVector:
        return self.darts[dart_id].weight

    def edges(self) -> List[Dart]:
        """Return one dart per undirected edge (the from->to dart), sorted by edge id."""
        return sorted((d for d in self.darts.values() if d.id.endswith("+")), key=lambda d: d.edge)

    def dart_between(self, p: str, edge: str) -> str:
        """Return the dart of ``edge`` whose source is ``p``."""
        for candidate in (f"{edge}+", f"{edge}-"):
            dart = self.darts.get(candidate)
            if dart is not None and dart.source == p:
                return candidate
        raise KeyError(f"Edge {edge} is not incident to {p}")

    def with_connection(self, connection: Optional[Connection]) -> "GKMGraph":
        return replace(self, connection=connection)

    def as_networkx(self) -> nx.MultiGraph:
        """Return the underlying unlabelled multigraph, edges keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for dart in self.edges():
            graph.add_edge(dart.source, dart.target, key=dart.edge)
        return graph


def _make_darts(doc: GraphDocument) -> Dict[str, Dart]:
    vertex_set = set(doc.vertices)
    darts: Dict[str, Dart] = {}
    seen_edges = set()
    for entry in doc.edges:
        if entry.id in seen_edges:
            raise GraphValidationError("Duplicate edge id", entry.id)
        seen_edges.add(entry.id)
        for endpoint in (entry.from_, entry.to):
            if endpoint not in vertex_set:
                raise GraphValidationError(f"Unknown endpoint {endpoint!r}", entry.id)
        if entry.from_ == entry.to:
            raise GraphValidationError("Loops are not allowed", entry.id)
        if len(entry.weight) != doc.torus_rank:
            raise GraphValidationError(
                f"Weight has length {len(entry.weight)}, torus rank is {doc.torus_rank}", entry.id
            )
        weight = WeightVector(tuple(entry.weight))
        if weight.is_zero():
            raise GraphValidationError("Zero weight", entry.id)
        if entry.reverse_weight is not None and tuple(entry.reverse_weight) != (-weight).entries:
            raise GraphValidationError("Twin weight is not the negated weight", entry.id)

        forward, backward = f"{entry.id}+", f"{entry.id}-"
        darts[forward] = Dart(forward, entry.from_, entry.to, backward, weight, entry.id)
        darts[backward] = Dart(backward, entry.to, entry.from_, forward, -weight, entry.id)
    return darts


def _check_graph(graph: GKMGraph) -> None:
    for p in graph.vertices:
        valence = len(graph.star(p))
        if valence != graph.dimension:
            raise GraphValidationError(
                f"Vertex has valence {valence}, dimension is {graph.dimension}", p
            )
    if not nx.is_connected(graph.as_networkx()):
        raise GraphValidationError("Graph is disconnected")
    weights = [d.weight.entries for d in graph.edges()]
    if rank_of_vectors(weights) != graph.torus_rank:
        raise GraphValidationError("Weights do not span Q^k (noneffective action)")


def connection_violations(graph: GKMGraph, connection: Connection) -> List[Tuple[str, str]]:
    """Return (dart, edge) pairs at which the collinearity axiom fails."""
    violations = []
    for dart_id, mapping in connection.maps.items():
        along = graph.weight(dart_id)
        for e, image in mapping.items():
            delta = graph.weight(image) - graph.weight(e)
            if collinear_scalar(delta.entries, along.entries) is None:
                violations.append((dart_id, e))
    return violations


def check_connection(graph: GKMGraph, connection: Connection, strict: bool = True) -> None:
    """Verify the connection axioms on ``graph``.

    Args:
        graph: The graph the connection lives on
        connection: Candidate connection
        strict: When False, collinearity failures are logged instead of raised

    Raises:
        GraphValidationError: If an axiom fails
    """
    for dart_id, dart in graph.darts.items():
        mapping = connection.maps.get(dart_id)
        if mapping is None:
            raise GraphValidationError("Connection has no map along dart", dart_id)
        if sorted(mapping) != list(graph.star(dart.source)):
            raise GraphValidationError("Connection map is not defined on the whole star", dart_id)
        if sorted(mapping.values()) != list(graph.star(dart.target)):
            raise GraphValidationError("Connection map is not a bijection onto the star", dart_id)
        if mapping[dart_id] != dart.twin:
            raise GraphValidationError("Connection does not send the dart to its twin", dart_id)
        inverse = connection.maps.get(dart.twin, {})
        if any(inverse.get(image) != e for e, image in mapping.items()):
            raise GraphValidationError("Connection along the twin is not the inverse", dart_id)

    violations = connection_violations(graph, connection)
    if violations:
        dart_id, e = violations[0]
        if strict:
            raise GraphValidationError(f"Collinearity fails for edge {e}", dart_id)
        logger.warning(f"Lenient load: collinearity fails at {len(violations)} (dart, edge) pairs")


def _make_connection(doc: GraphDocument, graph: GKMGraph) -> Connection:
    maps: Dict[str, Dict[str, str]] = {}
    for entry in doc.connection or []:
        forward = f"{entry.along}+"
        if forward not in graph.darts:
            raise GraphValidationError("Connection refers to an unknown edge", entry.along)
        if forward in maps:
            raise GraphValidationError("Duplicate connection entry", entry.along)
        dart = graph.dart(forward)
        mapping: Dict[str, str] = {}
        for at_source, at_target in entry.map:
            try:
                e = graph.dart_between(dart.source, at_source)
                image = graph.dart_between(dart.target, at_target)
            except KeyError as exc:
                raise GraphValidationError(str(exc.args[0]), entry.along) from exc
            if e in mapping:
                raise GraphValidationError(f"Edge {at_source} mapped twice", entry.along)
            mapping[e] = image
        maps[forward] = mapping
        maps[dart.twin] = {image: e for e, image in mapping.items()}
    return Connection(maps)


def parse_graph(document: Union[str, bytes, Mapping[str, Any]], strict: bool = True) -> GKMGraph:
    """Parse and validate a JSON graph document.

    Args:
        document: JSON text or an already decoded mapping
        strict: Enforce the collinearity axiom on a supplied connection

    Returns:
        The validated GKMGraph; it carries a connection iff one was supplied

    Raises:
        GraphValidationError: On schema violations, inconsistent twin weights,
            non-regular valence, disconnected or noneffective graphs and
            invalid connections
    """
    try:
        if isinstance(document, (str, bytes)):
            doc = GraphDocument.model_validate_json(document)
        else:
            doc = GraphDocument.model_validate(document)
    except ValidationError as exc:
        raise GraphValidationError(f"Schema violation: {exc}") from exc

    if len(set(doc.vertices)) != len(doc.vertices):
        raise GraphValidationError("Duplicate vertex id")

    graph = GKMGraph(
        torus_rank=doc.torus_rank,
        dimension=doc.dimension,
        vertices=tuple(sorted(doc.vertices)),
        darts=_make_darts(doc),
    )
    _check_graph(graph)

    if doc.connection is not None:
        connection = _make_connection(doc, graph)
        check_connection(graph, connection, strict=strict)
        graph = graph.with_connection(connection)

    logger.info(
        f"Parsed graph: {len(graph.vertices)} vertices, {len(graph.darts)} darts, "
        f"n={graph.dimension}, k={graph.torus_rank}"
    )
    return graph


def load_graph(path: Union[str, Path], strict: bool = True) -> GKMGraph:
    """Read and parse a graph document from ``path``."""
    return parse_graph(Path(path).read_text(encoding="utf-8"), strict=strict)


def to_document(graph: GKMGraph) -> Dict[str, Any]:
    """Serialize ``graph`` back into the input schema."""
    doc: Dict[str, Any] = {
        "torus_rank": graph.torus_rank,
        "dimension": graph.dimension,
        "vertices": list(graph.vertices),
        "edges": [
            {"id": d.edge, "from": d.source, "to": d.target, "weight": d.weight.as_list()}
            for d in graph.edges()
        ],
    }
    if graph.connection is not None:
        doc["connection"] = [
            {
                "along": d.edge,
                "map": [
                    [graph.dart(e).edge, graph.dart(image).edge]
                    for e, image in sorted(graph.connection.maps[d.id].items())
                ],
            }
            for d in graph.edges()
        ]
    return doc


def transport_scalar(graph: GKMGraph, dart_id: str, e: str) -> Fraction:
    """Return c with weight(theta_d(e)) = weight(e) + c * weight(d)."""
    assert graph.connection is not None
    image = graph.connection.transport(dart_id, e)
    delta = graph.weight(image) - graph.weight(e)
    c = collinear_scalar(delta.entries, graph.weight(dart_id).entries)
    if c is None:
        raise GraphValidationError(f"Collinearity fails for edge {e}", dart_id)
    return c
