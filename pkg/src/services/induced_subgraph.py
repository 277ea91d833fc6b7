# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Induced-subgraph containment (F-free tests) with deterministic witnesses.

Backtracking over the pattern's vertices in a degree-descending, connectivity-respecting
order. Candidate host vertices are filtered with bitset arithmetic: a candidate must be
adjacent to the images of already placed pattern neighbours and non-adjacent to the images
of placed non-neighbours.
"""

from collections.abc import Iterable, Iterator
from functools import lru_cache
from typing import NamedTuple

from .graph_core import Graph, members


class InducedWitness(NamedTuple):
    """Induced embedding of a pattern: pattern vertex ``i`` maps to ``mapping[i]``."""

    host_vertices: tuple[int, ...]
    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        """Edges and non-edges are both preserved and the images are distinct."""
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if tuple(sorted(self.mapping)) != self.host_vertices:
            return False
        for a in range(pattern.n):
            for b in range(a + 1, pattern.n):
                if pattern.has_edge(a, b) != host.has_edge(self.mapping[a], self.mapping[b]):
                    return False
        return True


@lru_cache(maxsize=512)
def _search_order(pattern: Graph) -> tuple[int, ...]:
    """Pattern vertices: most placed neighbours first, then degree, then index."""
    n = pattern.n
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        best = min(
            (-(pattern.adj[v] & placed).bit_count(), -pattern.degree(v), v) for v in remaining
        )[2]
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return tuple(order)


def _embeddings(host: Graph, pattern: Graph) -> Iterator[tuple[int, ...]]:
    """Yield mappings (pattern vertex -> host vertex) of induced copies, lazily."""
    k = pattern.n
    if k > host.n:
        return
    order = _search_order(pattern)
    h_adj = host.adj
    p_adj = pattern.adj
    h_deg = [row.bit_count() for row in h_adj]
    p_deg = [row.bit_count() for row in p_adj]
    image = [-1] * k
    full = host.vertex_mask

    def extend(depth: int, used: int) -> Iterator[tuple[int, ...]]:
        if depth == k:
            yield tuple(image)
            return
        p = order[depth]
        cand = full & ~used
        for q in order[:depth]:
            target = image[q]
            if p_adj[p] >> q & 1:
                cand &= h_adj[target]
            else:
                cand &= ~h_adj[target]
        need = p_deg[p]
        for v in members(cand):
            if h_deg[v] < need:
                continue
            image[p] = v
            yield from extend(depth + 1, used | (1 << v))
        image[p] = -1

    yield from extend(0, 0)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    """Existence test without witness ordering."""
    return next(_embeddings(host, pattern), None) is not None


def find_induced(host: Graph, pattern: Graph) -> InducedWitness | None:
    """Induced copy with the lexicographically least host set, then least mapping."""
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for mapping in _embeddings(host, pattern):
        key = (tuple(sorted(mapping)), mapping)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return InducedWitness(host_vertices=best[0], mapping=best[1])


def is_family_free(host: Graph, family: Iterable[Graph]) -> bool:
    """True iff no member occurs as an induced subgraph (vacuous for an empty family)."""
    return not any(contains_induced(host, f) for f in family)


def is_induced_subgraph_of(f: Graph, h: Graph) -> bool:
    return contains_induced(h, f)
