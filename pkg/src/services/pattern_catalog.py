# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Named graphs and the union / join / complement operators.

Every forbidden graph is assembled from its defining formula, e.g. the paw is
``join_of(K_1, union_of(K_1, K_2))`` and ``K_{1,1,3}`` is ``K_1 + K_1 + complement(K_3)``.
"""

import re
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from ..errors import CapacityError, PreconditionError
from .graph_core import MAX_ORDER, Graph


class PatternKind(str, Enum):
    """Families and named graphs of the catalog."""

    COMPLETE = "K"
    PATH = "P"
    CYCLE = "C"
    STAR = "Star"
    WHEEL = "Wheel"
    K113 = "K1,1,3"
    PAW = "Paw"
    GEM = "Gem"
    K1_K1UP3 = "K1+(K1uP3)"
    K14 = "K1,4"
    K2_K1UK2 = "K2+(K1uK2)"
    X = "X"
    CLAW = "Claw"
    K1P3 = "K1+P3"
    DIAMOND = "Diamond"
    OCTAHEDRON = "Octahedron"
    PETERSEN = "Petersen"


PARAMETERIZED = frozenset(
    {PatternKind.COMPLETE, PatternKind.PATH, PatternKind.CYCLE, PatternKind.STAR, PatternKind.WHEEL}
)

_MIN_ORDER = {
    PatternKind.COMPLETE: 1,
    PatternKind.PATH: 1,
    PatternKind.CYCLE: 3,
    PatternKind.STAR: 1,
    PatternKind.WHEEL: 4,
}

_PARAM_RE = re.compile(r"^(K|P|C|Star|Wheel)(\d+)$")


class PatternId(NamedTuple):
    """A catalog entry; ``order`` is set exactly for the parameterized families."""

    kind: PatternKind
    order: int | None = None

    @classmethod
    def complete(cls, n: int) -> "PatternId":
        return cls(PatternKind.COMPLETE, n)

    @classmethod
    def path(cls, n: int) -> "PatternId":
        return cls(PatternKind.PATH, n)

    @classmethod
    def cycle(cls, n: int) -> "PatternId":
        return cls(PatternKind.CYCLE, n)

    @classmethod
    def star(cls, n: int) -> "PatternId":
        """``K_{1,n-1}``, the star of order ``n``."""
        return cls(PatternKind.STAR, n)

    @classmethod
    def wheel(cls, n: int) -> "PatternId":
        """``K_1 + C_{n-1}``, the wheel of order ``n``."""
        return cls(PatternKind.WHEEL, n)

    @classmethod
    def parse(cls, text: str) -> "PatternId":
        """Inverse of ``str(pid)``; named graphs match case-insensitively."""
        text = text.strip()
        for kind in PatternKind:
            if kind not in PARAMETERIZED and kind.value.lower() == text.lower():
                return cls(kind)
        match = _PARAM_RE.match(text)
        if match is None:
            raise PreconditionError(f"Unknown pattern: {text!r}")
        return cls(PatternKind(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        if self.kind in PARAMETERIZED:
            return f"{self.kind.value}{self.order}"
        return self.kind.value


# =============================================================================
# Operators
# =============================================================================


def union_of(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h``'s vertices follow ``g``'s."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"Union of order {n} exceeds capacity {MAX_ORDER}")
    shift = g.n
    adj = list(g.adj) + [row << shift for row in h.adj]
    return Graph(n, adj, validate=False)


def join_of(g: Graph, h: Graph) -> Graph:
    """Union plus every edge between ``g`` and ``h``."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"Join of order {n} exceeds capacity {MAX_ORDER}")
    shift = g.n
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << shift
    adj = [row | h_mask for row in g.adj] + [(row << shift) | g_mask for row in h.adj]
    return Graph(n, adj, validate=False)


def complement_of(g: Graph) -> Graph:
    full = g.vertex_mask
    adj = [full ^ row ^ (1 << u) for u, row in enumerate(g.adj)]
    return Graph(g.n, adj, labels=g.labels, validate=False)


# =============================================================================
# Basic families
# =============================================================================


def empty_graph(n: int) -> Graph:
    """``K̄_n``: ``n`` isolated vertices."""
    return Graph(n, [0] * n, validate=False)


def complete_graph(n: int) -> Graph:
    return complement_of(empty_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """``K_{1,n-1} = K_1 + K̄_{n-1}``, center first."""
    if n == 1:
        return empty_graph(1)
    return join_of(empty_graph(1), empty_graph(n - 1))


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def _x_graph() -> Graph:
    # u0, u1, u2, u3, u1', u2', u3'
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
        (1, 2), (2, 3), (1, 3),
        (1, 4), (2, 5), (3, 6),
    ]
    return Graph.from_edges(7, edges, labels=["u0", "u1", "u2", "u3", "u1'", "u2'", "u3'"])


def _build(pid: PatternId) -> Graph:
    k1 = empty_graph(1)
    k2 = complete_graph(2)
    match pid.kind:
        case PatternKind.COMPLETE:
            return complete_graph(pid.order or 0)
        case PatternKind.PATH:
            return path_graph(pid.order or 0)
        case PatternKind.CYCLE:
            return cycle_graph(pid.order or 0)
        case PatternKind.STAR:
            return star_graph(pid.order or 0)
        case PatternKind.WHEEL:
            return join_of(k1, cycle_graph((pid.order or 0) - 1))
        case PatternKind.K113:
            return join_of(k1, join_of(k1, empty_graph(3))).with_labels(
                ["u1", "u2", "w1", "w2", "w3"]
            )
        case PatternKind.PAW:
            return join_of(k1, union_of(k1, k2)).with_labels(["a", "b", "c", "d"])
        case PatternKind.GEM:
            return join_of(k1, path_graph(4))
        case PatternKind.K1_K1UP3:
            return join_of(k1, union_of(k1, path_graph(3)))
        case PatternKind.K14:
            return star_graph(5)
        case PatternKind.K2_K1UK2:
            return join_of(k2, union_of(k1, k2))
        case PatternKind.X:
            return _x_graph()
        case PatternKind.CLAW:
            return join_of(k1, empty_graph(3))
        case PatternKind.K1P3:
            return join_of(k1, path_graph(3))
        case PatternKind.DIAMOND:
            return join_of(k2, empty_graph(2))
        case PatternKind.OCTAHEDRON:
            return join_of(empty_graph(2), join_of(empty_graph(2), empty_graph(2)))
        case PatternKind.PETERSEN:
            return _petersen()
    raise PreconditionError(f"Unknown pattern kind: {pid.kind}")


@lru_cache(maxsize=256)
def named_graph(pid: PatternId) -> Graph:
    """Canonical construction of a catalog entry."""
    if pid.kind in PARAMETERIZED:
        minimum = _MIN_ORDER[pid.kind]
        if pid.order is None or pid.order < minimum:
            raise PreconditionError(f"{pid.kind.value} needs order >= {minimum}, got {pid.order}")
        if pid.order > MAX_ORDER:
            raise CapacityError(f"Order {pid.order} exceeds capacity {MAX_ORDER}")
    elif pid.order is not None:
        raise PreconditionError(f"{pid.kind.value} takes no order parameter")
    return _build(pid)


def catalog_ids() -> list[PatternId]:
    """Entries listed by the ``catalog`` command."""
    listed = [
        PatternId.complete(3),
        PatternId.complete(4),
        PatternId.path(3),
        PatternId.path(4),
        PatternId.cycle(4),
        PatternId.cycle(5),
        PatternId.star(4),
        PatternId.star(5),
        PatternId.wheel(5),
    ]
    listed.extend(PatternId(kind) for kind in PatternKind if kind not in PARAMETERIZED)
    return listed
