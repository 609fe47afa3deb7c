"""Tests for graph ingestion, validation and export."""

import copy
import json

import pytest

from src.cli.fixtures import fixture_document, fixture_names, load_fixture
from src.gkm.errors import GraphValidationError
from src.gkm.model import load_graph, parse_graph, to_document, transport_scalar


def test_octahedron_shape():
    graph = load_fixture("octahedron")
    assert len(graph.vertices) == 6
    assert len(graph.edges()) == 12
    assert len(graph.darts) == 24
    assert graph.connection is None
    assert all(len(graph.star(p)) == 4 for p in graph.vertices)


def test_darts_and_twins():
    graph = load_fixture("octahedron")
    forward = graph.dart("xy+")
    backward = graph.dart("xy-")
    assert (forward.source, forward.target) == ("x", "y")
    assert forward.twin == "xy-" and backward.twin == "xy+"
    assert forward.weight.entries == (-1, 1, 0)
    assert backward.weight.entries == (1, -1, 0)
    assert graph.dart_between("y", "xy") == "xy-"


def test_bad_twin_names_the_edge(fixtures_dir):
    with pytest.raises(GraphValidationError) as info:
        load_graph(fixtures_dir / "bad-twin.json")
    assert info.value.ref == "e"
    assert "[e]" in str(info.value)


def test_schema_violation_is_wrapped():
    document = fixture_document("single-edge")
    del document["torus_rank"]
    with pytest.raises(GraphValidationError, match="Schema violation"):
        parse_graph(document)


def test_unknown_key_is_rejected():
    document = fixture_document("single-edge")
    document["edges"][0]["colour"] = 1
    with pytest.raises(GraphValidationError):
        parse_graph(document)


def test_wrong_weight_length():
    document = fixture_document("single-edge")
    document["edges"][0]["weight"] = [1, 0]
    with pytest.raises(GraphValidationError) as info:
        parse_graph(document)
    assert info.value.ref == "e"


def test_valence_mismatch_names_the_vertex():
    document = fixture_document("octahedron")
    document["edges"] = [e for e in document["edges"] if e["id"] != "xy"]
    with pytest.raises(GraphValidationError) as info:
        parse_graph(document)
    assert info.value.ref in ("x", "y")


def test_disconnected_graph():
    document = fixture_document("single-edge")
    document["vertices"] += ["P", "Q"]
    document["edges"].append({"id": "f", "from": "P", "to": "Q", "weight": [1]})
    with pytest.raises(GraphValidationError, match="disconnected"):
        parse_graph(document)


def test_noneffective_weights():
    document = fixture_document("cp2")
    for edge in document["edges"]:
        edge["weight"] = edge["weight"] + [0]
    document["torus_rank"] = 3
    with pytest.raises(GraphValidationError, match="span"):
        parse_graph(document)


def test_connection_must_send_dart_to_twin():
    document = fixture_document("cube3-projected")
    entry = document["connection"][0]
    # still a bijection, but the edge itself no longer goes to its twin
    entry["map"][0][1], entry["map"][2][1] = entry["map"][2][1], entry["map"][0][1]
    with pytest.raises(GraphValidationError):
        parse_graph(document)


def test_connection_collinearity_strict_and_lenient(caplog):
    document = fixture_document("hp2")
    with pytest.raises(GraphValidationError, match="Collinearity"):
        parse_graph(document, strict=True)
    graph = parse_graph(document, strict=False)
    assert graph.connection is not None
    assert any("Lenient load" in r.message for r in caplog.records)


def test_bundled_files_match_builders(fixtures_dir):
    for name, strict in [
        ("octahedron", True),
        ("single-edge", True),
        ("cube3-projected", True),
        ("hp2", False),
    ]:
        assert load_graph(fixtures_dir / f"{name}.json", strict=strict) == load_fixture(name)


@pytest.mark.parametrize("name", fixture_names())
def test_every_library_fixture_validates(name):
    graph = load_fixture(name)
    assert all(len(graph.star(p)) == graph.dimension for p in graph.vertices)


def test_export_reparses_to_the_same_graph():
    graph = load_fixture("cube3-projected")
    document = json.loads(json.dumps(to_document(graph)))
    assert parse_graph(document) == graph


def test_reverse_weight_accepted_when_negated():
    document = copy.deepcopy(fixture_document("single-edge"))
    document["edges"][0]["reverse_weight"] = [-1]
    assert parse_graph(document).weight("e-").entries == (-1,)


def test_transport_scalar_on_supplied_connection():
    graph = load_fixture("cube3-projected")
    # direction 0 transported along direction 2 keeps its weight
    assert transport_scalar(graph, "000-001+", "000-100+") == 0
    # the dart itself goes to its twin: -w = w + (-2) w
    assert transport_scalar(graph, "000-001+", "000-001+") == -2
