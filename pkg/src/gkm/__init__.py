"""GKM graph model: ingestion, validation, independence and connection."""

from .connection import compute_canonical_connection, ensure_connection, independence_level
from .model import (
    Connection,
    Dart,
    GKMGraph,
    WeightVector,
    load_graph,
    parse_graph,
    to_document,
    transport_scalar,
)

__all__ = [
    "Connection",
    "Dart",
    "GKMGraph",
    "WeightVector",
    "compute_canonical_connection",
    "ensure_connection",
    "independence_level",
    "load_graph",
    "parse_graph",
    "to_document",
    "transport_scalar",
]
