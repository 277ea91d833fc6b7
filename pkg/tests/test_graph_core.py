# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

import math
import pickle

import pytest

from src.errors import CapacityError, PreconditionError, VertexRangeError
from src.services.graph_core import (
    Graph,
    components,
    degree_profile,
    diameter,
    distance_levels,
    distance_sets,
    induce,
    is_connected,
    mask_of,
    members,
)
from src.services.pattern_catalog import (
    complete_graph,
    cycle_graph,
    path_graph,
    union_of,
)


class TestGraph:
    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.size == 2
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            Graph.from_edges(65, [])
        with pytest.raises(CapacityError):
            Graph(65, [0] * 65)

    def test_rejects_empty_order(self):
        with pytest.raises(PreconditionError):
            Graph(0, [])

    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(PreconditionError):
            Graph(2, [0b01, 0])
        with pytest.raises(PreconditionError):
            Graph(2, [0b10, 0])
        with pytest.raises(PreconditionError):
            Graph.from_edges(2, [(1, 1)])

    def test_vertex_range(self):
        with pytest.raises(VertexRangeError):
            Graph.from_edges(2, [(0, 2)])
        with pytest.raises(VertexRangeError):
            complete_graph(3).check_vertex(3)

    def test_equality_ignores_labels(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert g == g.with_labels(["a", "b"])
        assert hash(g) == hash(g.with_labels(["a", "b"]))

    def test_add_vertex(self):
        g = path_graph(3).add_vertex(mask_of([0, 2]))
        assert g == cycle_graph(4)

    def test_relabel(self):
        g = path_graph(3).relabel([1, 0, 2])
        assert list(g.edges()) == [(0, 1), (0, 2)]
        with pytest.raises(PreconditionError):
            path_graph(3).relabel([0, 0, 1])

    def test_pickles(self, x_graph):
        clone = pickle.loads(pickle.dumps(x_graph))
        assert clone == x_graph
        assert clone.labels == x_graph.labels


class TestDistances:
    def test_pentagon(self):
        assert list(members(distance_sets(cycle_graph(5), 0, 2))) == [2, 3]

    def test_triangle_has_no_second_level(self):
        assert distance_sets(complete_graph(3), 0, 2) == 0

    def test_k113(self, k113):
        assert distance_sets(k113, 0, 2) == 0
        assert list(members(distance_sets(k113, 2, 2))) == [3, 4]

    def test_levels_cover_component(self):
        levels = distance_levels(path_graph(4), 0)
        assert levels == [0b0001, 0b0010, 0b0100, 0b1000]

    def test_negative_distance(self):
        with pytest.raises(PreconditionError):
            distance_sets(path_graph(2), 0, -1)


class TestInduce:
    def test_k113_triangle(self, k113):
        h = induce(k113, mask_of([0, 1, 2]))
        assert h == complete_graph(3)
        assert h.origin == (0, 1, 2)
        assert h.labels == ("u1", "u2", "w1")

    def test_paw_triangle(self, paw):
        assert induce(paw, mask_of([0, 2, 3])) == complete_graph(3)

    def test_x_neighbourhood(self, x_graph):
        h = induce(x_graph, x_graph.neighbors(0))
        assert h.n == 6
        assert h.size == 6
        assert h.labels == ("u1", "u2", "u3", "u1'", "u2'", "u3'")

    def test_empty_set(self):
        with pytest.raises(PreconditionError):
            induce(path_graph(3), 0)

    def test_set_outside_graph(self):
        with pytest.raises(VertexRangeError):
            induce(path_graph(3), 0b1000)


class TestConnectivity:
    def test_examples(self, x_graph):
        assert is_connected(path_graph(4))
        assert not is_connected(union_of(complete_graph(1), complete_graph(2)))
        assert is_connected(x_graph)

    def test_components(self):
        g = union_of(complete_graph(2), path_graph(3))
        assert components(g) == [0b00011, 0b11100]

    def test_diameter(self, k113):
        assert diameter(k113) == 2
        assert diameter(complete_graph(5)) == 1
        assert diameter(complete_graph(1)) == 0
        assert diameter(union_of(complete_graph(1), complete_graph(2))) == math.inf


class TestDegreeProfile:
    def test_k113(self, k113):
        assert degree_profile(k113) == (2, 4, (4, 4, 2, 2, 2))

    def test_cycle(self):
        assert degree_profile(cycle_graph(6)) == (2, 2, (2,) * 6)

    def test_x(self, x_graph):
        assert degree_profile(x_graph) == (2, 6, (6, 4, 4, 4, 2, 2, 2))
