"""Tests for the degreewise face-ring verification and for restriction surjectivity."""

import pytest

from src.algebra.restriction import restriction_surjectivity
from src.algebra.theorem_b import applicability, default_max_degree, verify_theorem_b
from src.faces.face import span_face, vertex_face


def test_projected_cube_matches_face_ring(cube3p):
    report = verify_theorem_b(cube3p, 10)
    assert report.applicable and not report.reasons
    assert report.errors == []
    assert report.facet_count == 6
    assert report.degree_matches() == {0: True, 2: True, 4: True, 6: True, 8: True, 10: True}
    assert report.gkm.dims == (1, 5, 12, 20, 28, 36)
    assert report.betti == [1, 3, 3, 1, 0, 0]
    assert report.symmetric and report.total_matches
    assert report.thom is not None and report.thom.passed
    assert report.passed

    document = report.to_document()
    assert document["pass"] is True
    assert document["h_vector"] == [1, 3, 3, 1]
    assert [d["face_ring_quotient"] for d in document["degrees"]][:3] == ["1/1", "5/1", "12/1"]
    assert len(document["eta"]) == 6


def test_default_cutoff(cube3p):
    assert default_max_degree(cube3p) == 10
    assert verify_theorem_b(cube3p).max_degree == 10


@pytest.mark.parametrize("name", ["octahedron", "cube3", "cp3", "hp2", "cube2-projected"])
def test_inapplicable_graphs_are_reported(name, graph_named):
    graph = graph_named(name, strict=name != "hp2")
    report = verify_theorem_b(graph, 6)
    assert not report.applicable
    assert report.reasons
    assert not report.passed
    assert report.to_document() == {"applicable": False, "max_degree": 6, "reasons": report.reasons}


def test_octahedron_reasons(octahedron):
    reasons = applicability(octahedron)
    assert any("balanced coloring" in r for r in reasons)
    assert any("no facets" in r for r in reasons)
    assert not any("torus rank" in r for r in reasons)


def test_projected_four_cube(graph_named):
    report = verify_theorem_b(graph_named("cube4-projected"), 8)
    assert report.passed
    assert report.betti[:5] == [1, 4, 6, 4, 1]


@pytest.mark.slow
def test_projected_five_cube(graph_named):
    report = verify_theorem_b(graph_named("cube5-projected"))
    assert report.passed
    assert report.betti[:6] == [1, 5, 10, 10, 5, 1]
    assert sum(report.betti) == 32


def test_restriction_to_equatorial_square(octahedron):
    square = span_face(octahedron, "x", ["xy+", "Yx-"])
    report = restriction_surjectivity(octahedron, square, 10)
    by_degree = {d.degree: d for d in report.degrees}
    assert (by_degree[2].source_dim, by_degree[2].target_dim) == (4, 5)
    assert (by_degree[4].source_dim, by_degree[4].target_dim) == (11, 13)
    assert [d.degree for d in report.degrees if not d.surjective] == [2, 4, 6, 8, 10]
    assert [d.degree for d in report.degrees if not d.surjective_on_generators] == [2]
    assert report.to_document()["face"] == ["X", "Y", "x", "y"]


def test_equatorial_square_ranks_in_high_degree(octahedron):
    # the image misses the target even where source and target agree in size;
    # products with coordinates make up the difference
    square = span_face(octahedron, "x", ["xy+", "Yx-"])
    by_degree = {d.degree: d for d in restriction_surjectivity(octahedron, square, 10).degrees}
    ranks = {
        deg: (d.source_dim, d.target_dim, d.image_dim, d.generated_dim)
        for deg, d in by_degree.items()
        if deg >= 8
    }
    assert ranks == {8: (41, 41, 39, 41), 10: (65, 61, 59, 61)}
    assert by_degree[8].surjective_on_generators and not by_degree[8].surjective


def test_restriction_to_a_vertex_is_onto(cube3p):
    report = restriction_surjectivity(cube3p, vertex_face("000"), 6)
    assert all(d.surjective for d in report.degrees)


def test_restriction_to_a_toric_face(cube3):
    flat_face = span_face(cube3, "000", ["000-100+", "000-010+"])
    report = restriction_surjectivity(cube3, flat_face, 4)
    assert all(d.surjective_on_generators for d in report.degrees)

    edge = span_face(cube3, "000", ["000-100+"])
    assert restriction_surjectivity(cube3, edge, 2).degrees[0].surjective
