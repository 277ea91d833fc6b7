# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Immutable simple graphs over bitset adjacency rows.

Vertices are the indices ``0..n-1``. A vertex set is a plain ``int`` whose bit ``i``
marks vertex ``i``; every set operation in the engine is a word operation on these masks.
"""

import math
from collections.abc import Iterable, Iterator, Sequence
from typing import NamedTuple

import networkx as nx

from ..errors import CapacityError, PreconditionError, VertexRangeError

MAX_ORDER = 64

VertexSet = int


def bit(v: int) -> VertexSet:
    """Singleton set ``{v}``."""
    return 1 << v


def members(mask: VertexSet) -> Iterator[int]:
    """Iterate the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Build a vertex set from indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: VertexSet) -> int:
    """Smallest vertex of a non-empty set."""
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph with one neighbour bitset per vertex.

    Equality and hashing use the labelled structure ``(n, adj)`` only; display labels and
    the ``origin`` mapping recorded by :func:`induce` are informational.
    """

    __slots__ = ("_n", "_adj", "_labels", "_origin", "_hash")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        *,
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
        validate: bool = True,
    ):
        if n > MAX_ORDER:
            raise CapacityError(f"Order {n} exceeds capacity {MAX_ORDER}")
        if n < 1:
            raise PreconditionError("A graph needs at least one vertex")
        if len(adj) != n:
            raise PreconditionError(f"Expected {n} adjacency rows, got {len(adj)}")
        if labels is not None and len(labels) != n:
            raise PreconditionError(f"Expected {n} labels, got {len(labels)}")

        rows = tuple(adj)
        if validate:
            full = (1 << n) - 1
            for u, row in enumerate(rows):
                if row & ~full:
                    raise VertexRangeError(f"Vertex {u} has a neighbour index >= {n}")
                if row >> u & 1:
                    raise PreconditionError(f"Vertex {u} is its own neighbour")
                for v in members(row):
                    if not rows[v] >> u & 1:
                        raise PreconditionError(f"Adjacency is not symmetric at ({u}, {v})")

        self._n = n
        self._adj = rows
        self._labels = tuple(labels) if labels is not None else None
        self._origin = tuple(origin) if origin is not None else None
        self._hash = hash((n, rows))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a graph of order ``n`` from an edge list."""
        if n > MAX_ORDER:
            raise CapacityError(f"Order {n} exceeds capacity {MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"Edge ({u}, {v}) leaves 0..{n - 1}")
            if u == v:
                raise PreconditionError(f"Loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels=labels, validate=False)

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self._n) - 1

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self._adj) // 2

    @property
    def origin(self) -> tuple[int, ...]:
        """Index in the parent graph of every vertex (identity unless built by ``induce``)."""
        if self._origin is None:
            return tuple(range(self._n))
        return self._origin

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            return tuple(str(v) for v in range(self._n))
        return self._labels

    def label(self, v: int) -> str:
        self.check_vertex(v)
        return self._labels[v] if self._labels is not None else str(v)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexRangeError(f"Vertex {v} out of range 0..{self._n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, u: int) -> VertexSet:
        """Open neighbourhood N(u)."""
        return self._adj[u]

    def closed_neighbors(self, u: int) -> VertexSet:
        """Closed neighbourhood N[u]."""
        return self._adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._adj):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    # -- construct-new ---------------------------------------------------------

    def add_vertex(self, neighbors: VertexSet) -> "Graph":
        """New graph with one extra vertex ``n`` adjacent to ``neighbors``."""
        if neighbors & ~self.vertex_mask:
            raise VertexRangeError("New vertex neighbours leave the graph")
        n = self._n
        new = 1 << n
        adj = [row | new if neighbors >> u & 1 else row for u, row in enumerate(self._adj)]
        adj.append(neighbors)
        return Graph(n + 1, adj, validate=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        n = self._n
        if sorted(perm) != list(range(n)):
            raise PreconditionError("Relabelling is not a permutation of the vertices")
        adj = [0] * n
        for u, row in enumerate(self._adj):
            target = 0
            for v in members(row):
                target |= 1 << perm[v]
            adj[perm[u]] = target
        labels = None
        if self._labels is not None:
            relabelled = [""] * n
            for u, name in enumerate(self._labels):
                relabelled[perm[u]] = name
            labels = relabelled
        return Graph(n, adj, labels=labels, validate=False)

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self._n, self._adj, labels=labels, origin=self._origin, validate=False)

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges())})"

    def __getstate__(self) -> tuple[object, ...]:
        return (self._n, self._adj, self._labels, self._origin)

    def __setstate__(self, state: tuple[object, ...]) -> None:
        n, adj, labels, origin = state
        self._n = n  # type: ignore[assignment]
        self._adj = adj  # type: ignore[assignment]
        self._labels = labels  # type: ignore[assignment]
        self._origin = origin  # type: ignore[assignment]
        self._hash = hash((n, adj))


class DegreeProfile(NamedTuple):
    """δ(G), Δ(G) and the degree of every vertex in index order."""

    min_degree: int
    max_degree: int
    degrees: tuple[int, ...]


def reach_within(g: Graph, start: int, mask: VertexSet) -> VertexSet:
    """Vertices of ``mask`` reachable from ``start`` inside ``G[mask]``."""
    adj = g.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in members(frontier):
            grown |= adj[v]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen


def is_connected_within(g: Graph, mask: VertexSet) -> bool:
    """Whether ``G[mask]`` is connected; the empty set is not."""
    if not mask:
        return False
    return reach_within(g, lowest(mask), mask) == mask


def distance_levels(g: Graph, u: int) -> list[VertexSet]:
    """BFS levels ``[N^0(u), N^1(u), ...]`` up to the eccentricity of ``u``."""
    g.check_vertex(u)
    adj = g.adj
    seen = 1 << u
    levels = [seen]
    frontier = seen
    while True:
        grown = 0
        for v in members(frontier):
            grown |= adj[v]
        frontier = grown & ~seen
        if not frontier:
            return levels
        seen |= frontier
        levels.append(frontier)


def distance_sets(g: Graph, u: int, k: int) -> VertexSet:
    """``N^k(u)``: vertices at shortest-path distance exactly ``k`` from ``u``."""
    if k < 0:
        raise PreconditionError(f"Distance must be non-negative, got {k}")
    levels = distance_levels(g, u)
    return levels[k] if k < len(levels) else 0


def induce(g: Graph, s: VertexSet) -> Graph:
    """Induced subgraph ``G[s]``; ``origin`` maps new indices back to ``g``."""
    if not s:
        raise PreconditionError("Cannot induce on the empty set")
    if s & ~g.vertex_mask:
        raise VertexRangeError("Induced set leaves the graph")
    verts = list(members(s))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for w in members(g.adj[v] & s):
            row |= 1 << index[w]
        adj.append(row)
    labels = [g.label(v) for v in verts]
    return Graph(len(verts), adj, labels=labels, origin=verts, validate=False)


def components(g: Graph) -> list[VertexSet]:
    """Connected components ordered by their smallest vertex."""
    left = g.vertex_mask
    found = []
    while left:
        comp = reach_within(g, lowest(left), left)
        found.append(comp)
        left &= ~comp
    return found


def is_connected(g: Graph) -> bool:
    return reach_within(g, 0, g.vertex_mask) == g.vertex_mask


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance, ``math.inf`` for disconnected graphs."""
    if not is_connected(g):
        return math.inf
    return max(len(distance_levels(g, u)) - 1 for u in range(g.n))


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(row.bit_count() for row in g.adj)
    return DegreeProfile(min(degrees), max(degrees), degrees)


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy with nodes ``0..n-1``."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Bitset copy of ``h``; vertices are numbered in sorted node order."""
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])
