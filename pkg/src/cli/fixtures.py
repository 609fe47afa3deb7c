"""Library of bundled GKM graphs, built as JSON documents in the input schema."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Sequence

from ..gkm.model import GKMGraph, parse_graph

logger = logging.getLogger(__name__)

Document = Dict[str, Any]


@dataclass(frozen=True)
class FixtureSpec:
    """A named fixture.

    Attributes:
        name: Name accepted by ``--fixture``
        build: Builder returning the graph document
        normative: False for fixtures whose weights do not come from a real
            action; these load with the lenient connection check
        description: One-line description
    """

    name: str
    build: Callable[[], Document]
    normative: bool
    description: str


def _unit(k: int, i: int) -> List[int]:
    return [1 if j == i else 0 for j in range(k)]


def _difference(a: Sequence[int], b: Sequence[int]) -> List[int]:
    return [x - y for x, y in zip(a, b)]


def octahedron() -> Document:
    """Moment graph of Gr(4,2): vertices +-e_i, weight(p->q) = q - p, antipodes not joined."""
    names = {"x": (0, 1), "X": (0, -1), "y": (1, 1), "Y": (1, -1), "z": (2, 1), "Z": (2, -1)}
    points = {name: [sign * c for c in _unit(3, axis)] for name, (axis, sign) in names.items()}
    edges = []
    for p, q in combinations(sorted(names), 2):
        if names[p][0] == names[q][0]:
            continue
        weight = _difference(points[q], points[p])
        edges.append({"id": f"{p}{q}", "from": p, "to": q, "weight": weight})
    return {"torus_rank": 3, "dimension": 4, "vertices": sorted(names), "edges": edges}


def hp2() -> Document:
    """Combinatorial shell of HP^2: two edges per pair of the 3 fixed points.

    The weights are illustrative placeholders, not the axial function of
    the torus action on HP^2.

    Between p_i and p_j (i < j) edge ``a{i}{j}`` has weight e_j - e_i and
    edge ``b{i}{j}`` has weight e_i + e_j (from p_i). Along an a-edge the
    connection keeps the edge types, along a b-edge it swaps them at the
    third vertex. These weights admit no connection satisfying the
    collinearity axiom, so the fixture is non-normative.
    """
    vertices = ["p0", "p1", "p2"]
    edges = []
    connection = []
    for i, j in combinations(range(3), 2):
        edges.append({"id": f"a{i}{j}", "from": f"p{i}", "to": f"p{j}",
                      "weight": _difference(_unit(3, j), _unit(3, i))})
        edges.append({"id": f"b{i}{j}", "from": f"p{i}", "to": f"p{j}",
                      "weight": [x + y for x, y in zip(_unit(3, i), _unit(3, j))]})
    for i, j in combinations(range(3), 2):
        (m,) = set(range(3)) - {i, j}
        at_i = "".join(map(str, sorted((i, m))))
        at_j = "".join(map(str, sorted((j, m))))
        for kind, swap in (("a", {"a": "a", "b": "b"}), ("b", {"a": "b", "b": "a"})):
            mapping = [[f"a{i}{j}", f"a{i}{j}"], [f"b{i}{j}", f"b{i}{j}"]]
            mapping += [[f"{t}{at_i}", f"{swap[t]}{at_j}"] for t in "ab"]
            connection.append({"along": f"{kind}{i}{j}", "map": mapping})
    return {
        "torus_rank": 3,
        "dimension": 4,
        "vertices": vertices,
        "edges": edges,
        "connection": connection,
    }


def _flip(x: str, i: int) -> str:
    return x[:i] + ("1" if x[i] == "0" else "0") + x[i + 1:]


def _cube_edge(x: str, i: int) -> str:
    low = x if x[i] == "0" else _flip(x, i)
    return f"{low}-{_flip(low, i)}"


def cube(n: int, projected: bool = False) -> Document:
    """The n-cube; vertices are bit strings, edges ``<low>-<high>`` in direction i.

    With ``projected`` the direction weights are e_1, ..., e_{n-1} and
    (1, ..., 1) in Z^{n-1}, and the parallel-transport connection (direction
    l to direction l) is shipped, since the weights no longer determine it.
    """
    k = n - 1 if projected else n
    directions = [_unit(k, i) for i in range(k)]
    if projected:
        directions.append([1] * k)
    vertices = [format(v, f"0{n}b") for v in range(2**n)]
    edges = []
    for x in vertices:
        for i in range(n):
            if x[i] == "0":
                edges.append({"id": _cube_edge(x, i), "from": x, "to": _flip(x, i),
                              "weight": list(directions[i])})
    edges.sort(key=lambda e: e["id"])
    doc: Document = {"torus_rank": k, "dimension": n, "vertices": vertices, "edges": edges}
    if projected:
        doc["connection"] = [
            {
                "along": e["id"],
                "map": [[_cube_edge(e["from"], l), _cube_edge(e["to"], l)] for l in range(n)],
            }
            for e in edges
        ]
    return doc


def complete_graph(n: int) -> Document:
    """K_{n+1} with the weights of CP^n: weight(i->j) = e_j - e_i, e_0 = 0."""
    def point(i: int) -> List[int]:
        return _unit(n, i - 1) if i else [0] * n

    vertices = [f"v{i}" for i in range(n + 1)]
    edges = [
        {
            "id": f"v{i}v{j}",
            "from": f"v{i}",
            "to": f"v{j}",
            "weight": _difference(point(j), point(i)),
        }
        for i, j in combinations(range(n + 1), 2)
    ]
    return {"torus_rank": n, "dimension": n, "vertices": vertices, "edges": edges}


def single_edge() -> Document:
    """S^2 with the rotation action: two vertices, one edge."""
    return {
        "torus_rank": 1,
        "dimension": 1,
        "vertices": ["N", "S"],
        "edges": [{"id": "e", "from": "N", "to": "S", "weight": [1]}],
    }


def bad_twin() -> Document:
    """Invalid on purpose: the stated reverse weight is not the negated weight."""
    doc = single_edge()
    doc["edges"][0]["reverse_weight"] = [1]
    return doc


def _registry() -> Dict[str, FixtureSpec]:
    specs = [
        FixtureSpec("octahedron", octahedron, True, "Gr(4,2), complexity one in general position"),
        FixtureSpec("hp2", hp2, False, "HP^2 shell, illustrative weights, lenient connection"),
        FixtureSpec("single-edge", single_edge, True, "S^2, one edge"),
    ]
    for n in range(1, 6):
        specs.append(
            FixtureSpec(f"cube{n}", lambda n=n: cube(n), True, f"{n}-cube, coordinate weights")
        )
    for n in range(2, 6):
        specs.append(
            FixtureSpec(
                f"cube{n}-projected",
                lambda n=n: cube(n, projected=True),
                True,
                f"{n}-cube projected to rank {n - 1}",
            )
        )
    for n in range(1, 5):
        specs.append(
            FixtureSpec(
                f"cp{n}", lambda n=n: complete_graph(n), True, f"K_{n + 1} with CP^{n} weights"
            )
        )
    return {spec.name: spec for spec in specs}


FIXTURES: Dict[str, FixtureSpec] = _registry()

# Documents that must fail validation; not part of the loadable library.
INVALID_FIXTURES: Dict[str, Callable[[], Document]] = {"bad-twin": bad_twin}


def fixture_names(normative_only: bool = False) -> List[str]:
    return sorted(name for name, spec in FIXTURES.items() if spec.normative or not normative_only)


def fixture_document(name: str) -> Document:
    if name in INVALID_FIXTURES:
        return INVALID_FIXTURES[name]()
    if name not in FIXTURES:
        raise KeyError(f"Unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return FIXTURES[name].build()


def load_fixture(name: str, strict: bool = True) -> GKMGraph:
    """Build and parse a bundled fixture.

    Non-normative fixtures are always parsed leniently.
    """
    document = fixture_document(name)
    normative = FIXTURES[name].normative if name in FIXTURES else True
    logger.info(f"Loading fixture {name}")
    return parse_graph(document, strict=strict and normative)
