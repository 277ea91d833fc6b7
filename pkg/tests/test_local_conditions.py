# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

import pytest

from src.services.enumeration_io import enumerate_graphs
from src.services.local_conditions import (
    InducedP3,
    inclusion_exclusion_holds,
    induced_p3s,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    p3_counts,
    satisfies_common_neighbor_condition,
)
from src.services.pattern_catalog import complete_graph, cycle_graph, empty_graph, path_graph


class TestInducedP3s:
    def test_complete_graph_has_none(self):
        assert list(induced_p3s(complete_graph(5))) == []

    def test_pentagon(self):
        triples = list(induced_p3s(cycle_graph(5)))
        assert len(triples) == 5
        assert sorted(t.u for t in triples) == [0, 1, 2, 3, 4]
        assert all(t.v < t.w for t in triples)

    def test_k113(self, k113):
        triples = list(induced_p3s(k113))
        assert len(triples) == 6
        assert {t.u for t in triples} == {0, 1}


class TestLocallyConnected:
    def test_examples(self, k113, x_graph):
        assert is_locally_connected(k113).holds
        assert is_locally_connected(x_graph).holds

    def test_square_fails_with_witness(self):
        report = is_locally_connected(cycle_graph(4))
        assert not report.holds
        assert report.witness == 0

    def test_degree_conventions(self):
        assert is_locally_connected(complete_graph(2)).holds
        assert not is_locally_connected(empty_graph(1)).holds


class TestLocallyOre:
    def test_examples(self, octahedron):
        assert is_locally_ore(complete_graph(4)).holds
        assert is_locally_ore(octahedron).holds
        report = is_locally_ore(cycle_graph(5))
        assert not report.holds
        assert isinstance(report.witness, InducedP3)


class TestLocallyDirac:
    def test_examples(self, octahedron, k113):
        assert is_locally_dirac(octahedron).holds
        assert is_locally_dirac(complete_graph(3)).holds
        report = is_locally_dirac(k113)
        assert not report.holds
        assert report.witness == 0

    def test_isolated_vertex_passes(self):
        assert is_locally_dirac(empty_graph(1)).holds


class TestCommonNeighborCondition:
    def test_examples(self, octahedron):
        assert satisfies_common_neighbor_condition(octahedron).holds
        assert not satisfies_common_neighbor_condition(cycle_graph(5)).holds

    def test_x_fails_on_pendant_path(self, x_graph):
        counts = p3_counts(x_graph, InducedP3(4, 0, 5))
        assert counts.common_vw == 0
        assert counts.outside == 2
        report = satisfies_common_neighbor_condition(x_graph)
        assert not report.holds
        assert report.witness == InducedP3(4, 0, 5)

    def test_witness_has_largest_deficit(self, x_graph):
        report = satisfies_common_neighbor_condition(x_graph)
        worst = p3_counts(x_graph, report.witness)
        for p3 in induced_p3s(x_graph):
            counts = p3_counts(x_graph, p3)
            assert counts.outside - counts.common_vw <= worst.outside - worst.common_vw

    def test_k113_fails(self, k113):
        assert not satisfies_common_neighbor_condition(k113).holds


@pytest.mark.parametrize("n", range(1, 7))
def test_implication_chain(n):
    """Locally Dirac implies locally Ore implies the common-neighbour condition."""
    for g in enumerate_graphs(n, connected_only=False):
        if is_locally_dirac(g).holds:
            assert is_locally_ore(g).holds
        if is_locally_ore(g).holds:
            assert satisfies_common_neighbor_condition(g).holds
        for p3 in induced_p3s(g):
            assert inclusion_exclusion_holds(p3_counts(g, p3))


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_implication_chain_exhaustive(n):
    test_implication_chain(n)


def test_path_counts():
    counts = p3_counts(path_graph(3), InducedP3(0, 1, 2))
    assert counts == (2, 0, 0, 0, 0)
