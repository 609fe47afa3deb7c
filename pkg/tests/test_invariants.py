"""Invariants checked on every bundled fixture."""

from dataclasses import replace

import pytest

from src.algebra.eta import compute_eta
from src.algebra.gkm_classes import gkm_cohomology_dims
from src.algebra.theorem_b import applicability
from src.algebra.thom import thom_class
from src.cli.fixtures import FIXTURES, fixture_names
from src.faces.face import span_face
from src.faces.poset import enumerate_faces
from src.gkm.connection import independence_level
from src.gkm.errors import PreconditionError
from src.gkm.model import GKMGraph, WeightVector, transport_scalar
from src.structure.coloring import BalancedColoring, balanced_coloring
from src.structure.dual_poset import build_dual_simplicial_poset
from src.structure.facets import facets_from_coloring, has_facets
from src.topology.complex import order_complex
from src.topology.homology import chain_complex


def _params(names):
    return [pytest.param(n, marks=pytest.mark.slow) if "5" in n else n for n in names]


ALL = _params(fixture_names())
NORMATIVE = _params(fixture_names(normative_only=True))


@pytest.fixture
def graph(request, graph_named):
    name = request.param
    return graph_named(name, strict=FIXTURES[name].normative)


def _sheared(graph: GKMGraph) -> GKMGraph:
    """Apply a unimodular change of basis of Z^k to every weight."""

    def move(weight: WeightVector) -> WeightVector:
        entries = list(weight.entries)
        if len(entries) == 1:
            return WeightVector((-entries[0],))
        entries[0] += entries[-1]
        return WeightVector(tuple(entries))

    darts = {d: replace(dart, weight=move(dart.weight)) for d, dart in graph.darts.items()}
    return GKMGraph(graph.torus_rank, graph.dimension, graph.vertices, darts)


@pytest.mark.parametrize("graph", ALL, indirect=True)
def test_independence_level_is_basis_free(graph):
    assert independence_level(_sheared(graph)) == independence_level(graph)


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_transport_scalar_reproduces_connection(graph):
    for d, dart in graph.darts.items():
        for e in graph.star(dart.source):
            c = transport_scalar(graph, d, e)
            expected = tuple(
                a + c * b for a, b in zip(graph.weight(e).entries, graph.weight(d).entries)
            )
            assert graph.weight(graph.connection.transport(d, e)).entries == expected


@pytest.mark.parametrize("graph", ALL, indirect=True)
def test_coloring_axioms(graph):
    result = balanced_coloring(graph)
    if isinstance(result, BalancedColoring):
        assert result.violations(graph) == []
    else:
        assert result.expected != result.found


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_facets_agree_with_spanned_faces(graph):
    coloring = balanced_coloring(graph)
    if not isinstance(coloring, BalancedColoring):
        pytest.skip("no balanced coloring")
    facets = facets_from_coloring(graph, coloring)
    assert has_facets(graph)
    if graph.dimension == 1:
        return
    spanned = {
        span_face(graph, p, [d for d in graph.star(p) if d != e]).key
        for p in graph.vertices
        for e in graph.star(p)
    }
    assert spanned == {f.key for f in facets}


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_dual_poset_intervals_are_boolean(graph):
    coloring = balanced_coloring(graph)
    if not isinstance(coloring, BalancedColoring):
        pytest.skip("no balanced coloring")
    poset = build_dual_simplicial_poset(graph, facets_from_coloring(graph, coloring))
    poset.check_boolean_intervals()


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_free_module_dims(graph):
    n = graph.dimension
    if independence_level(graph) < min(2, n):
        with pytest.raises(PreconditionError):
            gkm_cohomology_dims(graph, 2 * n)
        return
    dims = gkm_cohomology_dims(graph, 2 * n)
    assert dims.free_module_consistent
    assert sum(dims.betti) == len(graph.vertices)


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_eta_vanishes_at_every_vertex(graph):
    if applicability(graph):
        pytest.skip("face-ring description does not apply")
    coloring = balanced_coloring(graph)
    eta = compute_eta(graph, facets_from_coloring(graph, coloring))
    assert all(c != 0 for c in eta.coefficients)
    for p in graph.vertices:
        assert not eta.value_at(graph, p)


@pytest.mark.parametrize("graph", NORMATIVE, indirect=True)
def test_face_poset_chains_and_thom_classes(graph):
    poset = enumerate_faces(graph, max(independence_level(graph) - 1, 0))
    assert chain_complex(order_complex(poset)).boundary_squared_vanishes()
    for face in poset.faces:
        thom_class(graph, face).check(graph)
