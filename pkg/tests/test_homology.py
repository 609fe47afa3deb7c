"""Tests for order complexes and the exact homology engine."""

import random
from fractions import Fraction
from itertools import combinations
from typing import List

import pytest

from src.faces.face import vertex_face, whole_graph_face
from src.faces.poset import FacePoset, enumerate_faces, lower_ideal, skeleton
from src.topology.complex import SimplicialComplexAbstract, order_complex
from src.topology.homology import (
    BettiVector,
    chain_complex,
    is_t_acyclic,
    reduce_columns,
    reduced_betti,
)
from src.utils.config import get_settings


def _dense_rank(rows: List[List[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _oracle_betti(complex_: SimplicialComplexAbstract) -> List[int]:
    """Reduced Betti numbers from dense rational boundary matrices."""
    levels = complex_.simplices
    ranks = []
    for dim, level in enumerate(levels):
        if dim == 0:
            ranks.append(1 if level else 0)
            continue
        index = {s: i for i, s in enumerate(levels[dim - 1])}
        matrix = [[Fraction(0)] * len(level) for _ in levels[dim - 1]]
        for j, simplex in enumerate(level):
            for k in range(len(simplex)):
                matrix[index[simplex[:k] + simplex[k + 1:]]][j] = Fraction((-1) ** k)
        ranks.append(_dense_rank(matrix))
    ranks.append(0)
    return [len(levels[i]) - ranks[i] - ranks[i + 1] for i in range(len(levels))]


def _random_complex(rng: random.Random) -> SimplicialComplexAbstract:
    n = rng.randint(4, 8)
    labels = [f"v{i}" for i in range(n)]
    maximal = [rng.sample(labels, rng.randint(1, min(4, n))) for _ in range(rng.randint(1, 7))]
    return SimplicialComplexAbstract.from_simplices(maximal, labels)


def test_boundary_of_triangle():
    circle = SimplicialComplexAbstract.from_simplices([("a", "b"), ("b", "c"), ("a", "c")])
    assert tuple(reduced_betti(circle)) == (0, 1)


def test_boundary_of_tetrahedron():
    sphere = SimplicialComplexAbstract.from_simplices(combinations("abcd", 3))
    betti = reduced_betti(sphere)
    assert tuple(betti) == (0, 0, 1)
    assert betti.euler_characteristic() == sphere.euler_characteristic()


def test_points_and_empty_complex():
    assert tuple(reduced_betti(SimplicialComplexAbstract.from_simplices([("a",)]))) == (0,)
    assert tuple(reduced_betti(SimplicialComplexAbstract.from_simplices([("a",), ("b",)]))) == (1,)
    empty = SimplicialComplexAbstract.from_simplices([])
    betti = reduced_betti(empty)
    assert betti.empty and betti.euler_characteristic() == -1
    assert empty.euler_characteristic() == -1


def test_is_t_acyclic():
    betti = BettiVector((0, 0, 2))
    assert is_t_acyclic(betti, 1)
    assert not is_t_acyclic(betti, 2)
    assert is_t_acyclic(BettiVector((3,)), -1)


def test_lowest_pivot_reduction():
    # columns e1 - e0, e2 - e1, e2 - e0 have rank 2
    columns = [{0: -1, 1: 1}, {1: -1, 2: 1}, {0: -1, 2: 1}]
    rank, pivots = reduce_columns(columns)
    assert rank == 2
    assert pivots == {1, 2}
    assert reduce_columns(columns, cleared={2})[0] == 2


def test_random_complexes_against_dense_oracle():
    rng = random.Random(20240611)
    limit = get_settings().homology_oracle_limit
    checked = 0
    while checked < 60:
        complex_ = _random_complex(rng)
        if len(complex_) > limit:
            continue
        assert complex_.is_closed()
        assert chain_complex(complex_).boundary_squared_vanishes()
        assert list(reduced_betti(complex_)) == _oracle_betti(complex_)
        checked += 1


def test_order_complex_of_a_face_poset(octahedron):
    poset = enumerate_faces(octahedron, 2)
    complex_ = order_complex(poset)
    assert complex_.dim == 2
    assert complex_.f_vector()[0] == len(poset)
    # surface of the octahedron with three disks glued along the squares
    assert tuple(reduced_betti(complex_)) == (0, 0, 4)


@pytest.mark.parametrize("name", ["cube3", "cp3"])
def test_order_complex_of_face_poset_with_top_is_a_cone(name, graph_named):
    graph = graph_named(name)
    poset = enumerate_faces(graph, graph.dimension - 1, include_top=True)
    complex_ = order_complex(poset)
    assert is_t_acyclic(reduced_betti(complex_), complex_.dim)


def test_order_complex_of_a_two_element_chain(single_edge):
    chain = FacePoset.from_faces([vertex_face("N"), whole_graph_face(single_edge)])
    complex_ = order_complex(chain)
    assert complex_.f_vector() == [2, 1]
    assert tuple(reduced_betti(complex_)) == (0, 0)


def test_order_complex_of_an_antichain():
    points = FacePoset.from_faces(vertex_face(p) for p in ("X", "Y", "Z"))
    complex_ = order_complex(points)
    assert complex_.f_vector() == [3]
    assert tuple(reduced_betti(complex_)) == (2,)


def test_order_complex_below_a_triangle_is_a_hexagon(octahedron):
    poset = enumerate_faces(octahedron, 2)
    triangle = next(f for f in poset.of_dim(2) if len(f.vertices) == 3)
    complex_ = order_complex(lower_ideal(poset, triangle))
    assert complex_.f_vector() == [6, 6]
    assert tuple(reduced_betti(complex_)) == (0, 1)


def test_order_complex_of_octahedron_one_skeleton(octahedron):
    complex_ = order_complex(skeleton(enumerate_faces(octahedron, 2), 1))
    assert complex_.f_vector() == [18, 24]
    assert tuple(reduced_betti(complex_)) == (0, 7)
