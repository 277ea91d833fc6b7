# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Sweeps over graph streams: theorem verification and the weak-pancyclicity search.

Graphs travel to worker processes as graph6 text in fixed-size chunks. Results come back
through ``Pool.imap``, which keeps submission order, so reports do not depend on the
number of workers.
"""

import itertools
import logging
import time
from collections.abc import Callable, Iterable, Iterator
from multiprocessing import Pool
from pathlib import Path
from typing import TypeVar

from tqdm import tqdm

from ..config import get_settings
from ..errors import CapacityError, PreconditionError
from ..models.report import Finding, SkippedGraph, SweepReport, TheoremCounters
from ..models.verdict import TheoremId, TheoremVerdict, VerdictStatus
from .cycle_engine import cycle_table, pancyclicity
from .enumeration_io import (
    CERTIFICATE_MAX_ORDER,
    ENUMERATION_MAX_ORDER,
    canonical_form,
    enumerate_graphs,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from .graph_core import Graph
from .theorem_suite import graph_facts, proposition_lattice_checks, verify_theorem

logger = logging.getLogger(__name__)

SWEEP_MIN_ORDER = 3
CONJECTURE = "ryjacek"

T = TypeVar("T")
R = TypeVar("R")


def chunkify(items: Iterable[T], chunk_size: int) -> Iterator[list[T]]:
    """Consecutive lists of at most ``chunk_size`` items."""
    it = iter(items)
    while chunk := list(itertools.islice(it, chunk_size)):
        yield chunk


# Worker functions live at module level so they pickle. A graph whose cycle tables exceed
# capacity comes back with the reason instead of a result. Both per-graph caches are
# dropped after every graph so a worker's memory stays flat over a chunk.

VerifyRow = tuple[list[TheoremVerdict], str | None]
SearchRow = tuple[bool, tuple[int, ...], str | None]


def _clear_caches() -> None:
    graph_facts.cache_clear()
    cycle_table.cache_clear()


def _skip_reason(g: Graph) -> str | None:
    limit = get_settings().spectrum_max_order
    if g.n > limit:
        return f"order {g.n} exceeds spectrum_max_order {limit}"
    return None


def _verify_chunk(task: tuple[tuple[str, ...], list[str]]) -> list[VerifyRow]:
    theorem_values, chunk = task
    theorems = [TheoremId(value) for value in theorem_values]
    results: list[VerifyRow] = []
    for line in chunk:
        g = parse_graph6(line)
        if reason := _skip_reason(g):
            results.append(([], reason))
            continue
        try:
            results.append(([verify_theorem(g, t) for t in theorems], None))
        except CapacityError as e:
            logger.warning(f"Skipping {line}: {e}")
            results.append(([], str(e)))
        finally:
            _clear_caches()
    return results


def _search_chunk(chunk: list[str]) -> list[SearchRow]:
    """Per graph: locally connected?, missing cycle orders, skip reason."""
    results: list[SearchRow] = []
    for line in chunk:
        g = parse_graph6(line)
        if reason := _skip_reason(g):
            results.append((False, (), reason))
            continue
        try:
            facts = graph_facts(g)
            if facts.connected and facts.locally_connected.holds:
                results.append((True, pancyclicity(g).missing, None))
            else:
                results.append((False, (), None))
        except CapacityError as e:
            logger.warning(f"Skipping {line}: {e}")
            results.append((False, (), str(e)))
        finally:
            _clear_caches()
    return results


class SweepService:
    """Fans a graph stream out to worker processes and folds the results into a report."""

    def __init__(self) -> None:
        settings = get_settings()
        self.jobs = settings.get_jobs()
        self.chunk_size = settings.chunk_size
        self.progress = settings.progress
        self.cache_dir = settings.get_cache_dir()

    # -------------------------------------------------------------------------
    # Graph sources
    # -------------------------------------------------------------------------

    def builtin_orders(self, n_max: int) -> Iterator[tuple[int, list[str]]]:
        """Connected canonical graphs of orders 3..n_max, one batch per order."""
        if not SWEEP_MIN_ORDER <= n_max <= ENUMERATION_MAX_ORDER:
            raise PreconditionError(
                f"n_max must lie in {SWEEP_MIN_ORDER}..{ENUMERATION_MAX_ORDER}, got {n_max}"
            )
        for n in range(SWEEP_MIN_ORDER, n_max + 1):
            yield n, [write_graph6(g) for g in enumerate_graphs(n, True, self.cache_dir)]

    def file_orders(self, path: str | Path) -> Iterator[tuple[int, list[str]]]:
        """Graphs of a graph6 file grouped by order, canonically relabelled when possible."""
        by_order: dict[int, list[str]] = {}
        for g in read_graph6_file(path):
            if g.n <= CERTIFICATE_MAX_ORDER:
                g = canonical_form(g)
            by_order.setdefault(g.n, []).append(write_graph6(g))
        logger.info(f"Read {sum(map(len, by_order.values()))} graphs from {path}")
        for n in sorted(by_order):
            yield n, by_order[n]

    def _source(self, n_max: int, source: str | None) -> Iterator[tuple[int, list[str]]]:
        if source:
            return self.file_orders(source)
        return self.builtin_orders(n_max)

    # -------------------------------------------------------------------------
    # Fan-out / fan-in
    # -------------------------------------------------------------------------

    def _map(
        self, worker: Callable[[T], list[R]], tasks: list[T], total: int, desc: str
    ) -> Iterator[R]:
        """Apply ``worker`` to every task, yielding flattened results in task order."""
        bar = tqdm(total=total, desc=desc, unit="graph", disable=not self.progress, leave=False)
        with bar:
            if self.jobs <= 1 or len(tasks) <= 1:
                for task in tasks:
                    chunk_results = worker(task)
                    bar.update(len(chunk_results))
                    yield from chunk_results
                return
            with Pool(processes=min(self.jobs, len(tasks))) as pool:
                for chunk_results in pool.imap(worker, tasks):
                    bar.update(len(chunk_results))
                    yield from chunk_results

    # -------------------------------------------------------------------------
    # Sweeps
    # -------------------------------------------------------------------------

    def run_verify(
        self, theorems: list[TheoremId], n_max: int, source: str | None = None
    ) -> SweepReport:
        """Verify every theorem on every graph of the stream."""
        started = time.perf_counter()
        values = tuple(t.value for t in theorems)
        report = SweepReport(
            command="verify",
            config={"theorems": list(values), "n_max": n_max, "source": source or "builtin"},
            counters={value: TheoremCounters() for value in values},
        )
        logger.info(f"Verifying {', '.join(values)} up to order {n_max} with {self.jobs} jobs")

        for n, lines in self._source(n_max, source):
            tasks = [(values, chunk) for chunk in chunkify(lines, self.chunk_size)]
            verdict_rows = self._map(_verify_chunk, tasks, len(lines), f"order {n}")
            applicable_per_order = dict.fromkeys(values, 0)
            for line, (verdicts, skipped) in zip(lines, verdict_rows, strict=True):
                if skipped is not None:
                    report.skipped.append(SkippedGraph(order=n, graph6=line, reason=skipped))
                    continue
                for verdict in verdicts:
                    key = verdict.theorem.value
                    report.counters[key].add(verdict)
                    if verdict.applicable:
                        applicable_per_order[key] += 1
                    if verdict.status is VerdictStatus.VIOLATION:
                        report.findings.append(
                            Finding(
                                source=key,
                                order=n,
                                graph6=line,
                                detail=verdict.witness.detail if verdict.witness else "",
                                witness=verdict.witness,
                            )
                        )
            logger.info(f"Order {n}: {len(lines)} graphs, applicable {applicable_per_order}")

        if TheoremId.P1 in theorems or TheoremId.P2 in theorems:
            report.lattice = proposition_lattice_checks()
            for fact in report.lattice:
                if not fact.passed:
                    report.findings.append(
                        Finding(source="lattice", order=0, graph6="", detail=fact.name)
                    )

        report.wall_time_seconds = time.perf_counter() - started
        self._log_outcome(report)
        return report

    def run_conjecture_search(self, n_max: int, source: str | None = None) -> SweepReport:
        """Connected locally connected graphs that are not weakly pancyclic."""
        started = time.perf_counter()
        counters = TheoremCounters()
        report = SweepReport(
            command="search",
            config={"conjecture": CONJECTURE, "n_max": n_max, "source": source or "builtin"},
            counters={CONJECTURE: counters},
        )
        logger.info(f"Searching for counterexamples up to order {n_max} with {self.jobs} jobs")

        for n, lines in self._source(n_max, source):
            tasks = list(chunkify(lines, self.chunk_size))
            rows = self._map(_search_chunk, tasks, len(lines), f"order {n}")
            locally_connected = 0
            for line, (applicable, missing, skipped) in zip(lines, rows, strict=True):
                if skipped is not None:
                    report.skipped.append(SkippedGraph(order=n, graph6=line, reason=skipped))
                    continue
                counters.examined += 1
                if not applicable:
                    continue
                locally_connected += 1
                counters.applicable += 1
                if not missing:
                    counters.verified += 1
                    continue
                counters.violations += 1
                report.findings.append(
                    Finding(
                        source=CONJECTURE,
                        order=n,
                        graph6=line,
                        detail=f"missing cycle orders {list(missing)}",
                    )
                )
            # monotone sanity log
            logger.info(f"Order {n}: {locally_connected} connected locally connected graphs")

        report.wall_time_seconds = time.perf_counter() - started
        self._log_outcome(report)
        return report

    def _log_outcome(self, report: SweepReport) -> None:
        if report.skipped:
            logger.warning(f"{report.command}: {len(report.skipped)} graphs skipped")
        if report.findings:
            logger.warning(f"{report.command}: {len(report.findings)} findings")
        else:
            logger.info(f"{report.command}: clean in {report.wall_time_seconds:.1f}s")


# Singleton instance
_sweep_service: SweepService | None = None


def get_sweep_service() -> SweepService:
    """Get or create the sweep service singleton."""
    global _sweep_service
    if _sweep_service is None:
        _sweep_service = SweepService()
    return _sweep_service
