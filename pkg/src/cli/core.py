"""Command-line application: argument parsing, input loading and dispatch."""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

from ..gkm.errors import (
    BooleanIntervalViolation,
    CongruenceError,
    FaceFamilyError,
    FacetConsistencyError,
    GKMError,
    InconsistentEtaError,
    ZeroCoefficientError,
)
from ..gkm.model import GKMGraph, load_graph
from ..utils.config import Settings
from .fixtures import fixture_names, load_fixture
from .handlers import EXIT_CHECK_FAILED, EXIT_INPUT, CommandHandlers, CommandResult
from .reports import render

logger = logging.getLogger(__name__)

Handler = Callable[[GKMGraph, argparse.Namespace], CommandResult]

# Errors that mean a mathematical property failed rather than bad input.
MATH_FAILURES = (
    BooleanIntervalViolation,
    CongruenceError,
    FaceFamilyError,
    FacetConsistencyError,
    InconsistentEtaError,
    ZeroCoefficientError,
)


class UsageError(GKMError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


class GKMApp:
    """The ``gkm`` command."""

    def __init__(self, settings: Settings) -> None:
        """Initialize the application with configuration settings.

        Args:
            settings: Application configuration settings
        """
        self.settings = settings
        self.handlers = CommandHandlers(settings)
        self.commands: Dict[str, Handler] = {}
        self._register_handlers()

    def _register_handlers(self) -> None:
        """Register the handler of every subcommand."""
        self.commands["validate"] = self.handlers.handle_validate
        self.commands["structure"] = self.handlers.handle_structure
        self.commands["faces"] = self.handlers.handle_faces
        self.commands["screen"] = self.handlers.handle_screen
        self.commands["cohomology"] = self.handlers.handle_cohomology
        self.commands["eta"] = self.handlers.handle_eta
        self.commands["hilbert"] = self.handlers.handle_hilbert
        self.commands["verify-b"] = self.handlers.handle_verify_b
        self.commands["restrict"] = self.handlers.handle_restrict
        self.commands["report"] = self.handlers.handle_report

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(
            prog="gkm",
            description="Face posets, realizability screens and equivariant cohomology "
            "of abstract GKM graphs",
            epilog=f"Bundled fixtures: {', '.join(fixture_names())}",
        )
        parser.add_argument("command", choices=list(self.commands))
        parser.add_argument("input", nargs="?", help="Graph document (JSON)")
        parser.add_argument("--fixture", help="Use a bundled fixture instead of an input file")
        parser.add_argument("--max-degree", type=int, help="Cohomological cutoff (default 2n+4)")
        parser.add_argument("--max-face-dim", type=int, help="Face enumeration limit (default j-1)")
        fmt = parser.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="output_format", action="store_const", const="json")
        fmt.add_argument("--text", dest="output_format", action="store_const", const="text")
        parser.add_argument("--face", help="restrict: face id or comma-separated vertex ids")
        parser.add_argument(
            "--lenient", action="store_true", help="Log collinearity failures instead of failing"
        )
        parser.add_argument("--timing", action="store_true", help="Include wall-clock timing")
        parser.add_argument(
            "--emit", action="store_true", help="validate: print the graph in the input schema"
        )
        return parser

    def load_input(self, options: argparse.Namespace) -> GKMGraph:
        strict = not options.lenient
        if options.fixture:
            if options.input:
                raise UsageError("Give either an input file or --fixture, not both")
            try:
                return load_fixture(options.fixture, strict=strict)
            except KeyError as e:
                raise UsageError(str(e.args[0])) from e
        if not options.input:
            raise UsageError("An input file or --fixture is required")
        path = Path(options.input)
        if not path.is_file() and (self.settings.fixtures_dir / path.name).is_file():
            path = self.settings.fixtures_dir / path.name
        if not path.is_file():
            raise UsageError(f"Input file not found: {path}")
        return load_graph(path, strict=strict)

    def execute(self, command: str, graph: GKMGraph, options: argparse.Namespace) -> CommandResult:
        """Run one command on a loaded graph, adding timing when asked."""
        start = time.perf_counter()
        result = self.commands[command](graph, options)
        if options.timing:
            result.document["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
        return result

    def run(
        self,
        argv: Optional[List[str]] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ) -> int:
        """Parse ``argv``, run the command and print its report.

        Returns:
            0 when every check passed, 2 when a mathematical check failed,
            1 on input or usage errors
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            options = self.build_parser().parse_args(argv)
            graph = self.load_input(options)
            result = self.execute(options.command, graph, options)
        except MATH_FAILURES as e:
            logger.error(f"Check failed: {e}")
            print(f"check failed: {e}", file=stderr)
            return EXIT_CHECK_FAILED
        except GKMError as e:
            logger.error(f"Input error: {e}")
            print(f"error: {e}", file=stderr)
            return EXIT_INPUT

        output_format = options.output_format or self.settings.output_format
        print(render(result.document, output_format), file=stdout)
        return result.exit_code
