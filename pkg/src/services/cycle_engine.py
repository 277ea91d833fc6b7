# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Cycles: spectrum, hamiltonicity, extendability, weak pancyclicity.

Extendability only depends on the vertex set of a cycle: ``C`` is extendable iff some
``u ∉ V(C)`` makes ``G[V(C) ∪ {u}]`` hamiltonian. The engine therefore works with
*cyclable sets* (vertex sets inducing a hamiltonian subgraph) rather than with cycles.

Two independent hamiltonicity deciders are provided:

- :func:`cycle_table`: subset dynamic programming over every vertex set at once
  (Held–Karp style: reachable path end-points from the smallest vertex of each set);
- :func:`hamiltonian_cycle`: backtracking with degree-2 forcing, which also returns
  the cycle.
"""

import logging
from collections.abc import Iterator, Sequence
from functools import lru_cache
from typing import NamedTuple

from ..config import get_settings
from ..errors import CapacityError, PreconditionError
from .graph_core import Graph, VertexSet, lowest, members

logger = logging.getLogger(__name__)

MIN_CYCLE_ORDER = 3


class OrderedCycle:
    """Cyclic vertex sequence ``(c_0, ..., c_{m-1})`` with ``succ``/``pred`` accessors."""

    __slots__ = ("_vertices", "_pos", "_mask")

    def __init__(self, vertices: Sequence[int]):
        seq = tuple(vertices)
        if len(seq) < MIN_CYCLE_ORDER:
            raise PreconditionError(f"A cycle needs at least 3 vertices, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise PreconditionError(f"Cycle vertices repeat: {seq}")
        self._vertices = seq
        self._pos = {v: i for i, v in enumerate(seq)}
        mask = 0
        for v in seq:
            mask |= 1 << v
        self._mask = mask

    @classmethod
    def on(cls, g: Graph, vertices: Sequence[int]) -> "OrderedCycle":
        """Build and check that consecutive vertices are adjacent in ``g``."""
        cycle = cls(vertices)
        for v in cycle:
            g.check_vertex(v)
        if not cycle.is_valid(g):
            raise PreconditionError(f"{cycle.vertices} is not a cycle of the graph")
        return cycle

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def mask(self) -> VertexSet:
        return self._mask

    @property
    def order(self) -> int:
        """n(C)."""
        return len(self._vertices)

    def succ(self, u: int) -> int:
        """u^+ under the fixed cyclic order."""
        i = self._pos[u] + 1
        return self._vertices[i if i < len(self._vertices) else 0]

    def pred(self, u: int) -> int:
        """u^- under the fixed cyclic order."""
        return self._vertices[self._pos[u] - 1]

    def reversed(self) -> "OrderedCycle":
        return OrderedCycle(self._vertices[::-1])

    def is_valid(self, g: Graph) -> bool:
        seq = self._vertices
        return all(g.has_edge(seq[i - 1], seq[i]) for i in range(len(seq)))

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedCycle):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"OrderedCycle({list(self._vertices)})"


class CyclableSet(NamedTuple):
    """Vertex set ``S`` with ``|S| >= 3`` such that ``G[S]`` is hamiltonian."""

    mask: VertexSet

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(members(self.mask))

    def witness(self, g: Graph) -> OrderedCycle:
        """A cycle through exactly the vertices of the set."""
        cycle = hamiltonian_cycle(g, self.mask)
        if cycle is None:
            raise PreconditionError(f"{self.vertices} is not cyclable")
        return cycle


class Outcome(NamedTuple):
    """Boolean verdict with the first offending object (vertex or cyclable set)."""

    holds: bool
    witness: int | CyclableSet | None = None


class Extension(NamedTuple):
    """A cycle ``C'`` on ``V(C) ∪ {vertex}``."""

    vertex: int
    cycle: OrderedCycle


class Pancyclicity(NamedTuple):
    girth: int | None
    circumference: int | None
    missing: tuple[int, ...]

    @property
    def acyclic(self) -> bool:
        return self.girth is None

    @property
    def weakly_pancyclic(self) -> bool:
        return not self.missing


class CycleTable:
    """Cyclability flag for every vertex subset of one graph."""

    __slots__ = ("n", "_flags", "_masks", "lengths")

    def __init__(self, n: int, flags: bytearray):
        self.n = n
        self._flags = flags
        masks = [mask for mask in range(len(flags)) if flags[mask]]
        masks.sort(key=lambda m: (m.bit_count(), tuple(members(m))))
        self._masks = tuple(masks)
        self.lengths = frozenset(m.bit_count() for m in masks)

    def is_cyclable(self, mask: VertexSet) -> bool:
        return bool(self._flags[mask])

    @property
    def masks(self) -> tuple[VertexSet, ...]:
        """Cyclable sets ascending by size, then lexicographically."""
        return self._masks


def _subset_flags(g: Graph) -> bytearray:
    n = g.n
    adj = g.adj
    size = 1 << n
    # reach[S]: end-points of hamiltonian paths of G[S] starting at min(S)
    reach = [0] * size
    for v in range(n):
        reach[1 << v] = 1 << v
    flags = bytearray(size)
    for mask in range(1, size):
        ends = reach[mask]
        if not ends:
            continue
        low = mask & -mask
        start = low.bit_length() - 1
        if ends & adj[start] and mask.bit_count() >= MIN_CYCLE_ORDER:
            flags[mask] = 1
        allowed = ~mask & ~((low << 1) - 1)
        while ends:
            end_bit = ends & -ends
            ends ^= end_bit
            ext = adj[end_bit.bit_length() - 1] & allowed
            while ext:
                nxt = ext & -ext
                ext ^= nxt
                reach[mask | nxt] |= nxt
    return flags


@lru_cache(maxsize=64)
def cycle_table(g: Graph) -> CycleTable:
    """Subset-DP table of all cyclable sets (order ≤ ``spectrum_max_order``)."""
    limit = get_settings().spectrum_max_order
    if g.n > limit:
        raise CapacityError(f"Cycle table needs order <= {limit}, got {g.n}")
    return CycleTable(g.n, _subset_flags(g))


def hamiltonian_cycle(g: Graph, mask: VertexSet | None = None) -> OrderedCycle | None:
    """Backtracking search for a cycle through exactly the vertices of ``mask``."""
    if mask is None:
        mask = g.vertex_mask
    if mask.bit_count() < MIN_CYCLE_ORDER:
        return None
    adj = [row & mask for row in g.adj]
    if any(adj[v].bit_count() < 2 for v in members(mask)):
        return None
    start = lowest(mask)
    path = [start]

    def extend(end: int, visited: VertexSet) -> bool:
        if visited == mask:
            return bool(adj[end] >> start & 1)
        free = mask & ~visited
        # each unplaced vertex still needs two cycle neighbours
        avail = free | (1 << end) | (1 << start)
        for w in members(free):
            if (adj[w] & avail).bit_count() < 2:
                return False
        for w in members(adj[end] & free):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if extend(start, 1 << start):
        return OrderedCycle(path)
    return None


def is_cyclable(g: Graph, mask: VertexSet) -> bool:
    if g.n <= get_settings().spectrum_max_order:
        return cycle_table(g).is_cyclable(mask)
    return hamiltonian_cycle(g, mask) is not None


def _walk(adj: Sequence[int], path: list[int], allowed: VertexSet) -> Iterator[tuple[int, ...]]:
    start = path[0]
    for w in members(adj[path[-1]] & allowed):
        path.append(w)
        if len(path) >= MIN_CYCLE_ORDER and adj[w] >> start & 1 and path[1] < w:
            yield tuple(path)
        yield from _walk(adj, path, allowed & ~(1 << w))
        path.pop()


def enumerate_cycles(g: Graph) -> Iterator[OrderedCycle]:
    """Every cycle of ``g`` once, starting at its smallest vertex with ``c_1 < c_{m-1}``."""
    for s in range(g.n):
        above = g.vertex_mask & ~((1 << (s + 1)) - 1)
        for seq in _walk(g.adj, [s], above):
            yield OrderedCycle(seq)


def girth_circumference(g: Graph) -> tuple[int, int] | None:
    """``(g(G), c(G))``, or ``None`` for acyclic graphs."""
    lengths = cycle_table(g).lengths
    if not lengths:
        return None
    return min(lengths), max(lengths)


def has_cycle_of_order(g: Graph, length: int) -> bool:
    if length < MIN_CYCLE_ORDER:
        raise PreconditionError(f"Cycle order must be >= 3, got {length}")
    if length > g.n:
        return False
    return length in cycle_table(g).lengths


def is_hamiltonian(g: Graph) -> bool:
    return g.n >= MIN_CYCLE_ORDER and hamiltonian_cycle(g) is not None


def pancyclicity(g: Graph) -> Pancyclicity:
    lengths = cycle_table(g).lengths
    if not lengths:
        return Pancyclicity(None, None, ())
    low, high = min(lengths), max(lengths)
    missing = tuple(k for k in range(low, high + 1) if k not in lengths)
    return Pancyclicity(low, high, missing)


def is_weakly_pancyclic(g: Graph) -> bool:
    """All orders between girth and circumference occur; vacuously true when acyclic."""
    return pancyclicity(g).weakly_pancyclic


def cyclable_sets(g: Graph) -> Iterator[CyclableSet]:
    """Every cyclable set once, ascending by size then lexicographically."""
    for mask in cycle_table(g).masks:
        yield CyclableSet(mask)


def _mask_of(s: CyclableSet | VertexSet) -> VertexSet:
    return s.mask if isinstance(s, CyclableSet) else s


def _check_extendable_input(g: Graph, mask: VertexSet) -> None:
    if mask & ~g.vertex_mask or not is_cyclable(g, mask):
        raise PreconditionError(f"{tuple(members(mask))} is not a cyclable set")
    if mask == g.vertex_mask:
        raise PreconditionError("Cyclable set spans the graph")


def is_cycle_extendable(g: Graph, s: CyclableSet | VertexSet) -> bool:
    """Some ``u ∉ S`` makes ``G[S ∪ {u}]`` hamiltonian."""
    mask = _mask_of(s)
    _check_extendable_input(g, mask)
    return any(is_cyclable(g, mask | (1 << u)) for u in members(g.vertex_mask & ~mask))


def find_extension(g: Graph, s: CyclableSet | VertexSet) -> Extension | None:
    """A concrete cycle of order ``|S| + 1`` containing ``S``, smallest new vertex first."""
    mask = _mask_of(s)
    _check_extendable_input(g, mask)
    for u in members(g.vertex_mask & ~mask):
        cycle = hamiltonian_cycle(g, mask | (1 << u))
        if cycle is not None:
            return Extension(u, cycle)
    return None


def every_vertex_on_triangle(g: Graph) -> Outcome:
    adj = g.adj
    for u in range(g.n):
        nbrs = adj[u]
        if not any(adj[x] & nbrs for x in members(nbrs)):
            return Outcome(False, u)
    return Outcome(True)


def is_fully_cycle_extendable(g: Graph) -> Outcome:
    """Every vertex on a triangle and every non-spanning cyclable set extendable."""
    triangles = every_vertex_on_triangle(g)
    if not triangles.holds:
        return triangles
    table = cycle_table(g)
    full = g.vertex_mask
    for mask in table.masks:
        if mask == full:
            continue
        outside = full & ~mask
        if not any(table.is_cyclable(mask | (1 << u)) for u in members(outside)):
            return Outcome(False, CyclableSet(mask))
    return Outcome(True)
