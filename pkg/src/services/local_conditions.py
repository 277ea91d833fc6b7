# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Local hypotheses: locally connected, locally Ore, locally Dirac, and the
common-neighbour condition ``|N(u)∩N(v)∩N(w)| > |N(u) \\ (N[v] ∪ N[w])|``.

Every check walks vertices (or induced paths ``vuw``) in a fixed order and reports the
first failure, so diagnostics are reproducible. The common-neighbour condition reports its
worst failure instead.
"""

from collections.abc import Iterator
from typing import NamedTuple

from .graph_core import Graph, is_connected_within, members


class InducedP3(NamedTuple):
    """Induced path ``v - u - w`` with center ``u`` and ``v < w``."""

    v: int
    u: int
    w: int


class ConditionReport(NamedTuple):
    """Outcome of a local check; ``witness`` is set exactly when the check fails."""

    holds: bool
    witness: int | InducedP3 | None = None


class P3Counts(NamedTuple):
    """Neighbourhood counts of an induced path ``vuw`` seen from its center."""

    degree: int  # d(u)
    common_v: int  # |N(u) ∩ N(v)|
    common_w: int  # |N(u) ∩ N(w)|
    common_vw: int  # |N(u) ∩ N(v) ∩ N(w)|
    outside: int  # |N(u) \ (N[v] ∪ N[w])|


HOLDS = ConditionReport(True)


def induced_p3s(g: Graph) -> Iterator[InducedP3]:
    """Every induced path of order 3 exactly once, ordered by (center, v, w)."""
    adj = g.adj
    for u in range(g.n):
        nbrs = list(members(adj[u]))
        for i, v in enumerate(nbrs):
            non_adjacent = ~adj[v]
            for w in nbrs[i + 1 :]:
                if non_adjacent >> w & 1:
                    yield InducedP3(v, u, w)


def p3_counts(g: Graph, p3: InducedP3) -> P3Counts:
    adj = g.adj
    v, u, w = p3
    nu, nv, nw = adj[u], adj[v], adj[w]
    closed = nv | nw | (1 << v) | (1 << w)
    return P3Counts(
        degree=nu.bit_count(),
        common_v=(nu & nv).bit_count(),
        common_w=(nu & nw).bit_count(),
        common_vw=(nu & nv & nw).bit_count(),
        outside=(nu & ~closed).bit_count(),
    )


def is_locally_connected(g: Graph) -> ConditionReport:
    """Every neighbourhood induces a connected graph; an empty neighbourhood does not."""
    for u in range(g.n):
        if not is_connected_within(g, g.adj[u]):
            return ConditionReport(False, u)
    return HOLDS


def is_locally_ore(g: Graph) -> ConditionReport:
    """``|N(u)∩N(v)| + |N(u)∩N(w)| >= d(u)`` on every induced path ``vuw``."""
    for p3 in induced_p3s(g):
        counts = p3_counts(g, p3)
        if counts.common_v + counts.common_w < counts.degree:
            return ConditionReport(False, p3)
    return HOLDS


def is_locally_dirac(g: Graph) -> ConditionReport:
    """``2 δ(G[N(u)]) >= d(u)`` at every vertex; δ of an empty neighbourhood is 0."""
    adj = g.adj
    for u in range(g.n):
        nbrs = adj[u]
        local_min = min(((adj[x] & nbrs).bit_count() for x in members(nbrs)), default=0)
        if 2 * local_min < nbrs.bit_count():
            return ConditionReport(False, u)
    return HOLDS


def satisfies_common_neighbor_condition(g: Graph) -> ConditionReport:
    """Strict ``|N(u)∩N(v)∩N(w)| > |N(u) \\ (N[v] ∪ N[w])|`` on every induced ``vuw``.

    The witness is the path with the largest deficit ``outside - common_vw``, the first
    such path in (center, v, w) order on ties.
    """
    worst: InducedP3 | None = None
    worst_deficit = -1
    for p3 in induced_p3s(g):
        counts = p3_counts(g, p3)
        deficit = counts.outside - counts.common_vw
        if deficit >= 0 and deficit > worst_deficit:
            worst, worst_deficit = p3, deficit
    if worst is None:
        return HOLDS
    return ConditionReport(False, worst)


def inclusion_exclusion_holds(counts: P3Counts) -> bool:
    """Degree of the center equals 2 plus the union of the two common neighbourhoods plus
    the neighbours outside ``N[v] ∪ N[w]`` (inclusion-exclusion)."""
    return counts.degree == (
        2 + counts.common_v + counts.common_w - counts.common_vw + counts.outside
    )
