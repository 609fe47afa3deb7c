"""Command handlers: one method per subcommand, each returning a document and exit code."""

import argparse
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..algebra.eta import compute_eta
from ..algebra.gkm_classes import gkm_cohomology_dims
from ..algebra.hilbert import face_ring_hilbert
from ..algebra.restriction import restriction_surjectivity
from ..algebra.theorem_b import default_max_degree, verify_theorem_b
from ..faces.face import ClosureFailure, Face, span_face
from ..faces.poset import enumerate_faces
from ..gkm.connection import ensure_connection, independence_level
from ..gkm.errors import GKMError, PreconditionError
from ..gkm.model import GKMGraph, to_document
from ..structure.coloring import BalancedColoring, balanced_coloring
from ..structure.dual_poset import build_dual_simplicial_poset
from ..structure.facets import facets_from_coloring
from ..structure.monodromy import two_face_monodromy
from ..structure.parity import two_faces
from ..structure.summary import structure_summary
from ..topology.screen import realizability_screen
from ..utils.config import Settings
from .reports import AnalysisReport, graph_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK_FAILED = 2


@dataclass
class CommandResult:
    document: Dict[str, Any]
    exit_code: int = EXIT_OK


class CommandHandlers:
    """Run the module pipelines behind each subcommand."""

    def __init__(self, settings: Settings) -> None:
        """Initialize handlers with configuration.

        Args:
            settings: Defaults for limits not given on the command line
        """
        self.settings = settings

    def _max_degree(self, graph: GKMGraph, options: argparse.Namespace) -> int:
        if options.max_degree is not None:
            return options.max_degree
        if self.settings.max_degree is not None:
            return self.settings.max_degree
        return default_max_degree(graph)

    def _max_face_dim(self, options: argparse.Namespace) -> Optional[int]:
        if options.max_face_dim is not None:
            return options.max_face_dim
        return self.settings.max_face_dim

    def _facets(self, graph: GKMGraph) -> List[Face]:
        coloring = balanced_coloring(graph)
        if not isinstance(coloring, BalancedColoring):
            raise PreconditionError("Graph has no balanced coloring, so no facets to work with")
        return facets_from_coloring(graph, coloring)

    def handle_validate(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``validate``: the graph already parsed, so report or re-emit it."""
        if options.emit:
            return CommandResult(to_document(graph))
        return CommandResult({"valid": True, "graph": graph_summary(graph)})

    def handle_structure(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``structure``: parity, coloring, facets and 2-face monodromy."""
        graph = ensure_connection(graph)
        document = structure_summary(graph).to_document()
        monodromy = []
        for face in two_faces(graph):
            base = min(face.vertices)
            result = two_face_monodromy(graph, face, base)
            monodromy.append(
                {
                    "face": sorted(face.vertices),
                    "base": base,
                    "moved": result.moved(),
                    "fixes_transversal": result.fixes_transversal(graph),
                }
            )
        document["two_faces"] = monodromy
        return CommandResult(document)

    def handle_faces(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``faces``: enumerate faces and export the poset with its covers."""
        graph = ensure_connection(graph)
        limit = self._max_face_dim(options)
        if limit is None:
            limit = max(independence_level(graph) - 1, 0)
        poset = enumerate_faces(graph, min(limit, graph.dimension))
        document = poset.to_document()
        document["max_face_dim"] = limit
        document["counts"] = {str(d): c for d, c in sorted(poset.counts().items())}
        return CommandResult(document)

    def handle_screen(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``screen``: run every skeleton and lower-ideal acyclicity check."""
        report, _ = realizability_screen(graph, self._max_face_dim(options))
        return CommandResult(report.to_document(), EXIT_OK if report.passed else EXIT_CHECK_FAILED)

    def handle_cohomology(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``cohomology``: graded dimensions of the GKM ring."""
        dims = gkm_cohomology_dims(graph, self._max_degree(graph, options))
        document = dims.to_document()
        document["max_degree"] = self._max_degree(graph, options)
        code = EXIT_OK if dims.free_module_consistent else EXIT_CHECK_FAILED
        return CommandResult(document, code)

    def handle_eta(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``eta``: facet coefficients of the degree-2 relation."""
        graph = ensure_connection(graph)
        facets = self._facets(graph)
        eta = compute_eta(graph, facets)
        return CommandResult({"facet_count": len(facets), "eta": eta.to_document()})

    def handle_hilbert(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``hilbert``: Hilbert series of the face ring and of its quotient by eta."""
        graph = ensure_connection(graph)
        poset = build_dual_simplicial_poset(graph, self._facets(graph))
        series = face_ring_hilbert(poset, self._max_degree(graph, options))
        return CommandResult(
            {
                "counts_by_rank": {str(r): c for r, c in sorted(poset.counts_by_rank().items())},
                "face_ring": series.to_document(),
                "quotient": series.times_one_minus_u().to_document(),
            }
        )

    def handle_verify_b(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``verify-b``; an inapplicable graph is reported, not failed."""
        report = verify_theorem_b(graph, self._max_degree(graph, options))
        code = EXIT_OK if not report.applicable or report.passed else EXIT_CHECK_FAILED
        return CommandResult(report.to_document(), code)

    def _resolve_face(self, graph: GKMGraph, spec: str, options: argparse.Namespace) -> Face:
        if "," not in spec and spec.startswith("f") and spec[1:].isdigit():
            limit = self._max_face_dim(options)
            if limit is None:
                limit = max(independence_level(graph) - 1, 0)
            poset = enumerate_faces(graph, min(limit, graph.dimension))
            try:
                return poset.by_id(spec)
            except KeyError as e:
                raise PreconditionError(f"No face {spec} among faces up to dim {limit}") from e

        vertices = {v.strip() for v in spec.split(",") if v.strip()}
        unknown = vertices - set(graph.vertices)
        if unknown:
            raise PreconditionError(f"Unknown vertices {sorted(unknown)}")
        base = min(vertices)
        seed = [d for d in graph.star(base) if graph.dart(d).target in vertices]
        if not seed:
            raise PreconditionError(f"Vertices {sorted(vertices)} do not span a face")
        face = span_face(graph, base, seed)
        if isinstance(face, ClosureFailure) or face.vertices != vertices:
            raise PreconditionError(f"Vertices {sorted(vertices)} do not span a face")
        return face

    def handle_restrict(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``restrict``: ranks of H*_T(graph) -> H*_T(face) per degree."""
        if not options.face:
            raise PreconditionError("restrict needs --face (a face id or comma-separated vertices)")
        graph = ensure_connection(graph)
        face = self._resolve_face(graph, options.face, options)
        report = restriction_surjectivity(graph, face, self._max_degree(graph, options))
        return CommandResult(report.to_document())

    def handle_report(self, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Handle ``report``: run every applicable pipeline and aggregate.

        Blocks whose preconditions fail record the error and are skipped.
        """
        report = AnalysisReport(graph=graph_summary(graph))
        failed = False
        try:
            graph = ensure_connection(graph)
        except GKMError as e:
            report.errors.append(f"connection: {e}")
            return CommandResult(report.to_document(), EXIT_INPUT)

        report.structure = structure_summary(graph).to_document()

        screen, _ = realizability_screen(graph, self._max_face_dim(options))
        report.screen = screen.to_document()
        failed |= not screen.passed

        max_degree = self._max_degree(graph, options)
        try:
            dims = gkm_cohomology_dims(graph, max_degree)
            report.algebra["cohomology"] = dims.to_document()
            failed |= not dims.free_module_consistent
        except GKMError as e:
            report.errors.append(f"cohomology: {e}")

        theorem_b = verify_theorem_b(graph, max_degree)
        report.algebra["verify_b"] = theorem_b.to_document()
        failed |= theorem_b.applicable and not theorem_b.passed

        logger.info(f"Report complete: failed={failed}, errors={len(report.errors)}")
        return CommandResult(report.to_document(), EXIT_CHECK_FAILED if failed else EXIT_OK)
