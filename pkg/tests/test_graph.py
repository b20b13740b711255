import math
import random

import pytest
from hypothesis import given, strategies as st

from curvlab.graph import (
    GraphError,
    ball,
    from_edge_list,
    induced_subgraph,
    is_connected,
    oracle_of,
    structure_queries,
)
from curvlab.generators import (
    cartesian_product,
    complete_graph,
    cycle_graph,
    integer_line,
    path_graph,
    petersen,
)
from conftest import random_graph


def test_from_edge_list_basic():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.m == 1 and g.adjacency == ((1,), (0,))
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(c4.degree(v) == 2 for v in range(4))


def test_from_edge_list_deduplicates():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(GraphError):
        from_edge_list(2, [(-1, 0)])


@given(st.integers(1, 9), st.data())
def test_adjacency_symmetric(n, data):
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    raw = data.draw(st.lists(pairs, max_size=20))
    edges = [(u, v) for u, v in raw if u != v]
    g = from_edge_list(n, edges)
    for u in range(n):
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
        assert list(g.adjacency[u]) == sorted(set(g.adjacency[u]))


def test_structure_queries_c4():
    info = structure_queries(cycle_graph(4))
    assert info.min_degree == info.max_degree == 2
    assert info.is_regular and info.is_connected
    assert info.girth == 4


def test_structure_queries_petersen():
    info = structure_queries(petersen())
    assert info.min_degree == 3 and info.girth == 5
    assert info.distances[0][7] == 2


def test_structure_queries_disconnected():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    info = structure_queries(g)
    assert not info.is_connected
    assert info.distances[0][2] == math.inf
    assert info.girth == math.inf


def test_girth_of_forest_is_infinite():
    assert structure_queries(path_graph(5)).girth == math.inf


def test_ball_integer_line():
    g, bmap = ball(integer_line(), 0, 2)
    assert g.n == 5
    assert bmap.vertices == (0, -1, 1, -2, 2)
    assert bmap.sphere == (0, 1, 1, 2, 2)
    # path structure: index of -1 is 1, of 1 is 2, etc.
    assert g.has_edge(0, 1) and g.has_edge(0, 2)
    assert g.has_edge(1, 3) and g.has_edge(2, 4)
    assert g.m == 4


def test_ball_radius_one():
    g, bmap = ball(integer_line(), 5, 1)
    assert bmap.vertices == (5, 4, 6)
    assert g.m == 2


def test_ball_petersen_covers_graph():
    p = petersen()
    g, bmap = ball(oracle_of(p), 0, 2)
    assert g.n == 10  # diameter 2


def test_ball_complete_has_empty_second_sphere():
    g, bmap = ball(oracle_of(complete_graph(5)), 2, 2)
    assert g.n == 5
    assert bmap.sphere_vertices(2) == ()


def test_ball_matches_induced_subgraph():
    rng = random.Random(99)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 10), 0.4)
        x = rng.randrange(g.n)
        bg, bmap = ball(oracle_of(g), x, 2)
        expected = induced_subgraph(g, list(bmap.vertices))
        assert bg == expected


def test_ball_rejects_other_radii():
    with pytest.raises(GraphError):
        ball(integer_line(), 0, 3)


def test_cartesian_product_degrees():
    rng = random.Random(4)
    for _ in range(20):
        a = random_graph(rng, rng.randint(1, 5), 0.5)
        b = random_graph(rng, rng.randint(1, 5), 0.5)
        prod = cartesian_product(a, b)
        assert prod.n == a.n * b.n
        for u in range(a.n):
            for v in range(b.n):
                assert prod.degree(u * b.n + v) == a.degree(u) + b.degree(v)


def test_is_connected_two_edges():
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(path_graph(4))
