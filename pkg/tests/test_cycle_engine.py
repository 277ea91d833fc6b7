# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

import networkx as nx
import pytest

from src.config import get_settings
from src.errors import CapacityError, PreconditionError
from src.services.cycle_engine import (
    CyclableSet,
    OrderedCycle,
    cyclable_sets,
    cycle_table,
    enumerate_cycles,
    every_vertex_on_triangle,
    find_extension,
    girth_circumference,
    hamiltonian_cycle,
    has_cycle_of_order,
    is_cycle_extendable,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_weakly_pancyclic,
    pancyclicity,
)
from src.services.enumeration_io import enumerate_graphs
from src.services.graph_core import mask_of
from src.services.pattern_catalog import (
    PatternId,
    PatternKind,
    complete_graph,
    cycle_graph,
    named_graph,
    path_graph,
)
from tests.conftest import to_nx

PETERSEN = named_graph(PatternId(PatternKind.PETERSEN))


class TestOrderedCycle:
    def test_successors(self):
        c = OrderedCycle.on(cycle_graph(4), [0, 1, 2, 3])
        assert c.succ(3) == 0
        assert c.pred(0) == 3
        assert c.reversed().succ(0) == 3
        assert c.order == 4
        assert 2 in c and 5 not in c

    def test_rejects_non_cycles(self):
        with pytest.raises(PreconditionError):
            OrderedCycle.on(cycle_graph(4), [0, 2, 1, 3])
        with pytest.raises(PreconditionError):
            OrderedCycle([0, 1])
        with pytest.raises(PreconditionError):
            OrderedCycle([0, 1, 0])


class TestSpectrum:
    def test_girth_circumference(self, k113):
        assert girth_circumference(cycle_graph(5)) == (5, 5)
        assert girth_circumference(k113) == (3, 4)
        assert girth_circumference(path_graph(4)) is None

    def test_has_cycle_of_order(self, k4, k113):
        assert has_cycle_of_order(k4, 3)
        assert has_cycle_of_order(k4, 4)
        assert not has_cycle_of_order(k113, 5)
        assert not has_cycle_of_order(cycle_graph(6), 4)
        assert not has_cycle_of_order(k4, 9)
        with pytest.raises(PreconditionError):
            has_cycle_of_order(k4, 2)

    def test_hamiltonian(self, x_graph, k113):
        assert not is_hamiltonian(x_graph)
        assert not is_hamiltonian(k113)
        assert is_hamiltonian(cycle_graph(7))
        assert not is_hamiltonian(complete_graph(2))

    def test_weakly_pancyclic(self, k113):
        assert is_weakly_pancyclic(k113)
        assert is_weakly_pancyclic(cycle_graph(5))
        assert is_weakly_pancyclic(path_graph(3))

    def test_petersen(self):
        spectrum = pancyclicity(PETERSEN)
        assert (spectrum.girth, spectrum.circumference) == (5, 9)
        assert spectrum.missing == (7,)
        assert not is_weakly_pancyclic(PETERSEN)

    def test_capacity(self, monkeypatch):
        monkeypatch.setenv("LCX_SPECTRUM_MAX_ORDER", "5")
        get_settings.cache_clear()
        cycle_table.cache_clear()
        with pytest.raises(CapacityError):
            cycle_table(cycle_graph(6))
        cycle_table.cache_clear()


class TestCyclableSets:
    def test_k4(self, k4):
        assert [s.mask for s in cyclable_sets(k4)] == [7, 11, 13, 14, 15]

    def test_pentagon(self):
        assert list(cyclable_sets(cycle_graph(5))) == [CyclableSet(0b11111)]

    def test_paw(self, paw):
        assert list(cyclable_sets(paw)) == [CyclableSet(mask_of([0, 2, 3]))]

    def test_witness_is_a_cycle(self, k113):
        s = CyclableSet(mask_of([0, 1, 2, 3]))
        cycle = s.witness(k113)
        assert cycle.mask == s.mask
        assert cycle.is_valid(k113)
        with pytest.raises(PreconditionError):
            CyclableSet(mask_of([2, 3, 4])).witness(k113)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_deciders_agree(self, n):
        for g in enumerate_graphs(n, connected_only=True):
            table = cycle_table(g)
            for mask in range(1, 1 << n):
                assert table.is_cyclable(mask) == (hamiltonian_cycle(g, mask) is not None)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_lengths_match_networkx(self, n):
        for g in enumerate_graphs(n, connected_only=False):
            expected = {len(c) for c in nx.simple_cycles(to_nx(g))}
            assert set(cycle_table(g).lengths) == expected


class TestEnumerateCycles:
    def test_counts(self, k4):
        assert len(list(enumerate_cycles(k4))) == 7
        assert len(list(enumerate_cycles(complete_graph(5)))) == 37
        assert len(list(enumerate_cycles(PETERSEN))) == len(list(nx.simple_cycles(to_nx(PETERSEN))))

    def test_each_cycle_once(self):
        seen = set()
        for cycle in enumerate_cycles(complete_graph(5)):
            assert cycle.is_valid(complete_graph(5))
            key = frozenset(
                frozenset((cycle.vertices[i - 1], cycle.vertices[i])) for i in range(len(cycle))
            )
            assert key not in seen
            seen.add(key)


class TestExtendability:
    def test_k113(self, k113):
        assert is_cycle_extendable(k113, mask_of([0, 1, 2]))
        assert not is_cycle_extendable(k113, mask_of([0, 1, 2, 3]))

    def test_k4(self, k4):
        assert is_cycle_extendable(k4, CyclableSet(mask_of([0, 1, 2])))

    def test_preconditions(self, k4, k113):
        with pytest.raises(PreconditionError):
            is_cycle_extendable(k4, k4.vertex_mask)
        with pytest.raises(PreconditionError):
            is_cycle_extendable(k113, mask_of([2, 3, 4]))

    def test_find_extension(self, k113):
        extension = find_extension(k113, mask_of([0, 1, 2]))
        assert extension is not None
        assert extension.vertex == 3
        assert extension.cycle.mask == mask_of([0, 1, 2, 3])
        assert extension.cycle.is_valid(k113)
        assert find_extension(k113, mask_of([0, 1, 2, 3])) is None

    def test_fully_cycle_extendable(self, k113, octahedron):
        assert is_fully_cycle_extendable(complete_graph(5)).holds
        assert is_fully_cycle_extendable(octahedron).holds
        outcome = is_fully_cycle_extendable(k113)
        assert not outcome.holds
        assert outcome.witness == CyclableSet(mask_of([0, 1, 2, 3]))

    def test_triangles(self, paw):
        assert every_vertex_on_triangle(paw) == (False, 1)
        assert every_vertex_on_triangle(complete_graph(3)).holds
        assert not every_vertex_on_triangle(cycle_graph(4)).holds
        assert not is_fully_cycle_extendable(paw).holds


class TestDiracCondition:
    """Connected graphs with ``2δ >= n >= 3`` are hamiltonian."""

    @pytest.mark.parametrize("n", range(3, 7))
    def test_minimum_degree_forces_hamiltonicity(self, n):
        dense = [
            g
            for g in enumerate_graphs(n, connected_only=True)
            if 2 * min(row.bit_count() for row in g.adj) >= n
        ]
        assert dense
        for g in dense:
            assert is_hamiltonian(g)
            cycle = hamiltonian_cycle(g)
            assert cycle is not None
            assert cycle.mask == g.vertex_mask
            assert cycle.is_valid(g)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_minimum_degree_forces_hamiltonicity_exhaustive(self, n):
        self.test_minimum_degree_forces_hamiltonicity(n)


class TestExtendabilityFromCycleLists:
    """``is_cycle_extendable`` agrees with the vertex sets of the enumerated cycles."""

    @pytest.mark.parametrize("n", range(3, 7))
    def test_matches_enumerated_cycles(self, n):
        for g in enumerate_graphs(n, connected_only=False):
            cycle_masks = {cycle.mask for cycle in enumerate_cycles(g)}
            assert cycle_masks == set(cycle_table(g).masks)
            for mask in cycle_masks:
                if mask == g.vertex_mask:
                    continue
                outside = [u for u in range(n) if not mask >> u & 1]
                expected = any(mask | (1 << u) in cycle_masks for u in outside)
                assert is_cycle_extendable(g, mask) == expected

    @pytest.mark.slow
    def test_matches_enumerated_cycles_order_7(self):
        self.test_matches_enumerated_cycles(7)
