"""Command-line interface and fixture library."""

from .core import GKMApp, UsageError
from .fixtures import FIXTURES, fixture_document, fixture_names, load_fixture
from .handlers import CommandHandlers, CommandResult
from .reports import AnalysisReport, render_json, render_text

__all__ = [
    "AnalysisReport",
    "CommandHandlers",
    "CommandResult",
    "FIXTURES",
    "GKMApp",
    "UsageError",
    "fixture_document",
    "fixture_names",
    "load_fixture",
    "render_json",
    "render_text",
]
