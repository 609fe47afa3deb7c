"""Tests for monodromy, parity, balanced colorings, facets and dual posets."""

import pytest

from src.gkm.errors import BooleanIntervalViolation, PreconditionError
from src.structure.coloring import BalancedColoring, ColoringObstruction, balanced_coloring
from src.structure.dual_poset import DualSimplicialPoset, build_dual_simplicial_poset
from src.structure.facets import facets_from_coloring, has_facets
from src.structure.monodromy import two_face_monodromy
from src.structure.parity import is_bipartite, is_even, two_faces
from src.structure.summary import structure_summary


def _compose(first, second):
    return {e: second[first[e]] for e in first}


def test_octahedron_two_faces(octahedron):
    faces = two_faces(octahedron)
    assert len(faces) == 11
    assert sum(1 for f in faces if len(f.vertices) == 3) == 8


def test_octahedron_triangle_monodromy_transposes_transversals(octahedron):
    triangles = [f for f in two_faces(octahedron) if len(f.vertices) == 3]
    for face in triangles:
        for base in sorted(face.vertices):
            result = two_face_monodromy(octahedron, face, base)
            t1, t2 = face.transversal(octahedron, base)
            assert result.permutation[t1] == t2
            assert result.permutation[t2] == t1
            assert not result.fixes_transversal(octahedron)


def test_monodromy_inverse_of_reverse_walk(octahedron, hp2):
    for graph in (octahedron, hp2):
        for face in two_faces(graph):
            base = min(face.vertices)
            forward = two_face_monodromy(graph, face, base)
            backward = two_face_monodromy(graph, face, base, reverse=True)
            assert _compose(forward.permutation, backward.permutation) == {
                e: e for e in graph.star(base)
            }


def test_square_monodromy_is_identity(octahedron, cube3p):
    squares = [f for f in two_faces(octahedron) if len(f.vertices) == 4]
    for graph, faces in ((octahedron, squares), (cube3p, two_faces(cube3p))):
        for face in faces:
            assert two_face_monodromy(graph, face, min(face.vertices)).fixes_transversal(graph)


def test_monodromy_preconditions(octahedron):
    face = two_faces(octahedron)[0]
    outside = next(p for p in octahedron.vertices if p not in face.vertices)
    with pytest.raises(PreconditionError):
        two_face_monodromy(octahedron, face, outside)


@pytest.mark.parametrize(
    "name,even,bipartite",
    [
        ("octahedron", False, False),
        ("hp2", False, False),
        ("cube3", True, True),
        ("cube3-projected", True, True),
        ("cp3", False, False),
        ("single-edge", True, True),
    ],
)
def test_parity(name, even, bipartite, graph_named):
    graph = graph_named(name, strict=name != "hp2")
    assert is_even(graph) is even
    assert is_bipartite(graph) is bipartite
    if bipartite:
        assert even


def test_projected_cube_coloring_and_facets(cube3p):
    coloring = balanced_coloring(cube3p)
    assert isinstance(coloring, BalancedColoring)
    assert coloring.violations(cube3p) == []
    assert set(coloring.color.values()) == {1, 2, 3}
    # colors follow the cube directions
    for dart in cube3p.edges():
        direction = next(i for i in range(3) if dart.source[i] != dart.target[i])
        same = [d for d in cube3p.edges() if d.source[direction] != d.target[direction]]
        assert {coloring.color[d.edge] for d in same} == {coloring.color[dart.edge]}

    facets = facets_from_coloring(cube3p, coloring)
    assert len(facets) == 6
    for facet in facets:
        assert len(facet.vertices) == 4
        assert facet.is_totally_geodesic(cube3p)
        for p in facet.vertices:
            assert len(facet.star(cube3p, p)) == 2
    assert has_facets(cube3p)


@pytest.mark.parametrize("name", ["octahedron", "cp3"])
def test_coloring_obstructions(name, graph_named):
    graph = graph_named(name)
    result = balanced_coloring(graph)
    assert isinstance(result, ColoringObstruction)
    assert result.expected != result.found
    assert result.cycle[0] == result.cycle[-1] == graph.vertices[0]
    assert result.to_document()["dart"] == result.dart


def test_octahedron_has_no_facets(octahedron):
    assert not has_facets(octahedron)


def test_single_edge_facets_are_vertices(single_edge):
    coloring = balanced_coloring(single_edge)
    facets = facets_from_coloring(single_edge, coloring)
    assert [sorted(f.vertices) for f in facets] == [["N"], ["S"]]
    assert has_facets(single_edge)
    poset = build_dual_simplicial_poset(single_edge, facets)
    assert len(poset) == 3
    assert poset.counts_by_rank() == {0: 1, 1: 2}


def test_projected_cube_dual_poset(cube3p):
    facets = facets_from_coloring(cube3p, balanced_coloring(cube3p))
    poset = build_dual_simplicial_poset(cube3p, facets)
    assert poset.counts_by_rank() == {0: 1, 1: 6, 2: 12, 3: 8}
    assert poset.rank[poset.bottom] == 0
    assert poset.faces[poset.bottom].dim == 3
    vertex = poset.elements[-1]
    assert len(poset.atoms_below(vertex)) == 3


def test_boolean_interval_violation():
    # a rank-2 element above three atoms is not a boolean interval
    poset = DualSimplicialPoset(
        elements=("0", "a", "b", "c", "t"),
        rank={"0": 0, "a": 1, "b": 1, "c": 1, "t": 2},
        below={
            "0": frozenset(),
            "a": frozenset({"0"}),
            "b": frozenset({"0"}),
            "c": frozenset({"0"}),
            "t": frozenset({"0", "a", "b", "c"}),
        },
    )
    with pytest.raises(BooleanIntervalViolation) as info:
        poset.check_boolean_intervals()
    assert info.value.element == "t"


def test_simplicial_complex_face_poset_is_boolean():
    poset = DualSimplicialPoset.from_simplices([("a", "b"), ("b", "c"), ("a", "c")])
    poset.check_boolean_intervals()
    assert poset.counts_by_rank() == {0: 1, 1: 3, 2: 3}


@pytest.mark.parametrize("name,facets", [("cube4-projected", 8)])
def test_projected_cube_facet_count(name, facets, graph_named):
    graph = graph_named(name)
    assert len(facets_from_coloring(graph, balanced_coloring(graph))) == facets


@pytest.mark.slow
def test_projected_five_cube_structure(graph_named):
    graph = graph_named("cube5-projected")
    for face in two_faces(graph):
        for base in sorted(face.vertices):
            assert two_face_monodromy(graph, face, base).fixes_transversal(graph)
    facets = facets_from_coloring(graph, balanced_coloring(graph))
    assert len(facets) == 10
    assert all(f.is_totally_geodesic(graph) for f in facets)


def test_structure_summary(octahedron, cube3p):
    octa = structure_summary(octahedron).to_document()
    assert octa["even"] is False and octa["balanced"] is False
    assert octa["has_facets"] is False
    assert "obstruction" in octa and "coloring" not in octa
    cube = structure_summary(cube3p).to_document()
    assert cube["balanced"] is True and len(cube["facets"]) == 6
