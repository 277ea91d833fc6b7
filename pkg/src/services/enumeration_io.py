# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Isomorphism classes, canonical certificates, and graph6 I/O.

Canonical labelling is a refinement/individualisation search: the ordered partition of the
vertices is refined by neighbour counts until equitable, then the first non-trivial cell is
split by individualising each of its vertices in turn. Cells made of pairwise twins are
never branched on, since any order of their vertices gives the same adjacency code. The
certificate is the graph6 text of the relabelling with the smallest upper-triangle code.

Generation is by vertex augmentation: every graph of order ``n`` is a class representative
of order ``n - 1`` plus one vertex, and every connected graph arises from a connected one
(delete a non-cut vertex). Candidates are de-duplicated by certificate.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator
from functools import lru_cache
from pathlib import Path

import networkx as nx

from ..errors import CapacityError, Graph6Error
from .graph_core import MAX_ORDER, Graph, from_networkx, is_connected, mask_of, to_networkx

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
CERTIFICATE_MAX_ORDER = 10
ENUMERATION_MAX_ORDER = 8
BRUTE_FORCE_MAX_ORDER = 6

# OEIS A001349 for n = 1..8
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
# OEIS A000088 for n = 1..8
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


# =============================================================================
# graph6
# =============================================================================


def write_graph6(g: Graph) -> str:
    """graph6 text (no header, no newline)."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


def _decode_order(data: list[int]) -> tuple[int, list[int]]:
    """Order field and body of a graph6 record (bytes already shifted by 63)."""
    if data[0] != 63:
        return data[0], data[1:]
    if len(data) > 1 and data[1] == 63:
        raise CapacityError(f"graph6 order beyond capacity {MAX_ORDER}")
    if len(data) < 4:
        raise Graph6Error("Truncated graph6 order field")
    return (data[1] << 12) | (data[2] << 6) | data[3], data[4:]


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 record; an optional ``>>graph6<<`` prefix is skipped.

    networkx decodes the adjacency. Printable bytes, the order capacity and zero padding
    bits are checked here first.
    """
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6Error("Empty graph6 record")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"Non-printable graph6 byte {ch!r}")

    n, body = _decode_order([ord(ch) - 63 for ch in text])
    if n > MAX_ORDER:
        raise CapacityError(f"Order {n} exceeds capacity {MAX_ORDER}")
    if n == 0:
        raise Graph6Error("graph6 record of order 0")

    try:
        h = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Error(f"Malformed graph6 record: {e}") from e
    padding = -(n * (n - 1) // 2) % 6
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6Error("Non-zero graph6 padding bits")
    return from_networkx(h)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse records, skipping blank lines and a bare header line."""
    for line in lines:
        text = line.strip()
        if not text or text == GRAPH6_HEADER:
            continue
        yield parse_graph6(text)


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as f:
        yield from read_graph6_lines(f)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    """Write one record per line (LF); returns the number written."""
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as f:
        for g in graphs:
            f.write(write_graph6(g) + "\n")
            count += 1
    return count


# =============================================================================
# Canonical labelling
# =============================================================================


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until the partition is equitable."""
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[signature] for signature in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _is_twin_cell(adj: tuple[int, ...], cell: list[int]) -> bool:
    for u, v in itertools.combinations(cell, 2):
        if adj[u] & ~(1 << v) != adj[v] & ~(1 << u):
            return False
    return True


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling has the minimum adjacency code."""
    if g.n > CERTIFICATE_MAX_ORDER:
        raise CapacityError(
            f"Canonical certificates support order <= {CERTIFICATE_MAX_ORDER}, got {g.n}"
        )
    adj = g.adj
    best: list[tuple[int, list[int]]] = []

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1 and not _is_twin_cell(adj, cell):
                for v in cell:
                    rest = [w for w in cell if w != v]
                    search(cells[:i] + [[v], rest] + cells[i + 1 :])
                return
        order = [v for cell in cells for v in cell]
        code = _code(adj, order)
        if not best or code < best[0][0]:
            best[:] = [(code, order)]

    search([list(range(g.n))])
    return best[0][1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return write_graph6(canonical_form(g))


def canonical_certificate(g: Graph) -> bytes:
    """Bytes equal for two graphs of the same order iff they are isomorphic."""
    return canonical_graph6(g).encode("ascii")


# =============================================================================
# Enumeration
# =============================================================================


def _augment(previous: Iterable[Graph], n: int, connected_only: bool) -> list[Graph]:
    found: dict[bytes, Graph] = {}
    first = 1 if connected_only else 0
    for h in previous:
        for neighbors in range(first, 1 << (n - 1)):
            g = h.add_vertex(neighbors)
            canon = canonical_form(g)
            cert = write_graph6(canon).encode("ascii")
            if cert not in found:
                found[cert] = canon
    return [found[cert] for cert in sorted(found)]


def _cache_file(cache_dir: Path, n: int, connected_only: bool) -> Path:
    return cache_dir / f"{'connected' if connected_only else 'all'}-{n}.g6"


@lru_cache(maxsize=32)
def _classes(n: int, connected_only: bool, cache_dir: str | None) -> tuple[Graph, ...]:
    expected = (CONNECTED_COUNTS if connected_only else ALL_COUNTS)[n]
    cache_file = _cache_file(Path(cache_dir), n, connected_only) if cache_dir else None
    if cache_file is not None and cache_file.exists():
        cached = tuple(read_graph6_file(cache_file))
        if len(cached) == expected:
            logger.debug(f"Loaded {len(cached)} graphs of order {n} from {cache_file}")
            return cached
        logger.warning(f"Ignoring stale enumeration cache {cache_file}")

    if n == 1:
        classes = [Graph(1, [0])]
    else:
        classes = _augment(_classes(n - 1, connected_only, cache_dir), n, connected_only)
    if len(classes) != expected:
        logger.error(f"Generated {len(classes)} classes of order {n}, expected {expected}")
    kind = "connected graphs" if connected_only else "graphs"
    logger.info(f"Enumerated {len(classes)} {kind} of order {n}")

    if cache_file is not None:
        write_graph6_file(cache_file, classes)
    return tuple(classes)


def enumerate_graphs(
    n: int, connected_only: bool, cache_dir: str | Path | None = None
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, ascending by certificate."""
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise CapacityError(f"Built-in generator covers orders 1..{ENUMERATION_MAX_ORDER}, got {n}")
    yield from _classes(n, connected_only, str(cache_dir) if cache_dir else None)


def enumerate_graphs_brute_force(n: int, connected_only: bool) -> list[Graph]:
    """Oracle: every labelled graph, de-duplicated by certificate (small orders only)."""
    if not 1 <= n <= BRUTE_FORCE_MAX_ORDER:
        raise CapacityError(f"Brute-force oracle covers orders 1..{BRUTE_FORCE_MAX_ORDER}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for chosen in range(1 << len(pairs)):
        edges = [pair for k, pair in enumerate(pairs) if chosen >> k & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not is_connected(g):
            continue
        canon = canonical_form(g)
        found.setdefault(write_graph6(canon).encode("ascii"), canon)
    return [found[cert] for cert in sorted(found)]
