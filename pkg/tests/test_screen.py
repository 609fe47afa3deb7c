"""Tests for the realizability screen."""

import pytest

from src.faces.poset import enumerate_faces
from src.topology.screen import realizability_screen


@pytest.mark.parametrize(
    "name", ["octahedron", "cube2", "cube3", "cube4", "cube3-projected", "cube4-projected",
             "cp1", "cp2", "cp3", "cp4", "single-edge"]
)
def test_screen_passes_on_geometric_fixtures(name, graph_named):
    report, _ = realizability_screen(graph_named(name))
    assert report.passed, [c.to_document() for c in report.failures()]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["cube5", "cube5-projected"])
def test_screen_passes_on_five_dimensional_fixtures(name, graph_named):
    report, _ = realizability_screen(graph_named(name))
    assert report.passed


def test_octahedron_screen_checks(octahedron):
    report, poset = realizability_screen(octahedron)
    assert report.independence == 3
    assert report.max_face_dim == 2
    names = [c.object for c in report.checks]
    assert names[:3] == ["skeleton:0", "skeleton:1", "skeleton:2"]
    assert len(names) == 3 + len(poset)
    edges = next(c for c in report.checks if c.object == "skeleton:1")
    assert tuple(edges.betti) == (0, 7)
    assert edges.target_t == 0 and edges.passed
    top = next(c for c in report.checks if c.object == "skeleton:2")
    assert top.target_t == 1
    assert tuple(top.betti) == (0, 0, 4)
    assert not report.notes


def test_low_independence_is_noted(cube3p):
    report, _ = realizability_screen(cube3p)
    assert report.independence == 2
    assert [c.object for c in report.checks[:2]] == ["skeleton:0", "skeleton:1"]
    assert any("independence level 2" in note for note in report.notes)


def test_screen_reuses_a_given_poset(octahedron):
    poset = enumerate_faces(octahedron, 1)
    report, used = realizability_screen(octahedron, max_face_dim=1, poset=poset)
    assert used is poset
    assert report.face_counts == {0: 6, 1: 12}


def test_screen_document(octahedron):
    document = realizability_screen(octahedron)[0].to_document()
    assert document["pass"] is True
    assert document["face_counts"] == {"0": 6, "1": 12, "2": 11}
    assert set(document["checks"][0]) == {"object", "target_t", "betti", "pass"}
