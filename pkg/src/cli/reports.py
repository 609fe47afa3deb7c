"""Report assembly and deterministic rendering."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .. import __version__
from ..algebra.polynomials import format_rational
from ..gkm.connection import independence_level
from ..gkm.model import GKMGraph


def graph_summary(graph: GKMGraph) -> Dict[str, Any]:
    return {
        "vertices": len(graph.vertices),
        "edges": len(graph.edges()),
        "n": graph.dimension,
        "k": graph.torus_rank,
        "independence": independence_level(graph),
        "connection_supplied": graph.connection is not None,
    }


@dataclass
class AnalysisReport:
    """Aggregated output of the ``report`` command.

    Blocks that do not apply to the graph stay None and are rendered as null.
    """

    graph: Dict[str, Any]
    structure: Optional[Dict[str, Any]] = None
    screen: Optional[Dict[str, Any]] = None
    algebra: Dict[str, Any] = field(default_factory=dict)
    errors: List[str] = field(default_factory=list)
    version: str = __version__

    def to_document(self) -> Dict[str, Any]:
        return {
            "graph": self.graph,
            "structure": self.structure,
            "screen": self.screen,
            "algebra": self.algebra,
            "errors": list(self.errors),
            "version": self.version,
        }


def _default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def render_json(document: Dict[str, Any]) -> str:
    """Serialize with sorted keys; identical documents give identical bytes."""
    return json.dumps(document, sort_keys=True, indent=2, default=_default)


def _text_lines(value: Any, prefix: str) -> List[str]:
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            lines += _text_lines(value[key], f"{prefix}.{key}" if prefix else str(key))
        return lines or [f"{prefix}: {{}}"]
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines = []
        for i, item in enumerate(value):
            lines += _text_lines(item, f"{prefix}[{i}]")
        return lines
    if isinstance(value, Fraction):
        value = format_rational(value)
    if isinstance(value, list):
        value = ", ".join(str(format_rational(v) if isinstance(v, Fraction) else v) for v in value)
    return [f"{prefix}: {value}"]


def render_text(document: Dict[str, Any]) -> str:
    """Flatten the document into ``dotted.key: value`` lines."""
    return "\n".join(_text_lines(document, ""))


def render(document: Dict[str, Any], output_format: str) -> str:
    return render_text(document) if output_format == "text" else render_json(document)
