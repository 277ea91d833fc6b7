# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Report renderers (text, JSON, CSV). Everything here writes to stdout only."""

import csv
import io
import json
import sys
from collections.abc import Sequence

from pydantic import BaseModel

from ..config import OutputFormat
from ..models.report import CatalogEntry, CheckReport, SweepReport

SWEEP_CSV_HEADER = (
    "record",
    "source",
    "order",
    "graph6",
    "examined",
    "applicable",
    "verified",
    "violations",
    "witness_kind",
    "witness_vertices",
    "detail",
)
CATALOG_CSV_HEADER = ("pattern", "graph6", "order", "size", "degrees")
CHECK_CSV_HEADER = ("graph6", "field", "value")


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv(header: Sequence[str], rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(models: BaseModel | Sequence[BaseModel]) -> str:
    if isinstance(models, BaseModel):
        return models.model_dump_json(indent=2)
    return json.dumps([m.model_dump(mode="json") for m in models], indent=2)


def _vertices(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


# =============================================================================
# Sweeps
# =============================================================================


def render_sweep(report: SweepReport, fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json(report)
    if fmt == "csv":
        rows: list[list[object]] = []
        for source, c in report.counters.items():
            rows.append(
                ["counter", source, "", "", c.examined, c.applicable, c.verified, c.violations]
                + ["", "", ""]
            )
        for f in report.findings:
            kind = f.witness.kind if f.witness else ""
            vertices = _vertices(f.witness.vertices) if f.witness else ""
            rows.append(
                ["finding", f.source, f.order, f.graph6, "", "", "", "", kind, vertices, f.detail]
            )
        for s in report.skipped:
            rows.append(["skipped", "", s.order, s.graph6, "", "", "", "", "", "", s.reason])
        return _csv(SWEEP_CSV_HEADER, rows)

    lines = [f"{report.command}: {', '.join(f'{k}={v}' for k, v in report.config.items())}", ""]
    width = max((len(k) for k in report.counters), default=8)
    lines.append(f"{'id':<{width}}  examined  applicable  verified  violations")
    for source, c in report.counters.items():
        lines.append(
            f"{source:<{width}}  {c.examined:>8}  {c.applicable:>10}  {c.verified:>8}"
            f"  {c.violations:>10}"
        )
    if report.lattice:
        lines.append("")
        for fact in report.lattice:
            lines.append(f"[{'ok' if fact.passed else 'FAIL'}] {fact.name}")
    if report.skipped:
        lines.append("")
        lines.append(f"{len(report.skipped)} graphs skipped:")
        lines.extend(f"  n={s.order} {s.graph6}: {s.reason}" for s in report.skipped)
    lines.append("")
    if report.findings:
        lines.append(f"{len(report.findings)} findings:")
        for f in report.findings:
            witness = ""
            if f.witness:
                vertices = _vertices(f.witness.vertices)
                witness = f" ({f.witness.kind} {vertices})" if vertices else f" ({f.witness.kind})"
            lines.append(f"  {f.source} n={f.order} {f.graph6}{witness}: {f.detail}")
    else:
        lines.append("no findings")
    lines.append(f"wall time: {report.wall_time_seconds:.2f}s")
    return "\n".join(lines)


# =============================================================================
# Check
# =============================================================================


def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def render_check(reports: Sequence[CheckReport], fmt: OutputFormat, single: bool) -> str:
    if fmt == "json":
        return _json(reports[0] if single else reports)
    if fmt == "csv":
        rows: list[list[object]] = []
        for r in reports:
            for name, value in r.model_dump(mode="json").items():
                if isinstance(value, dict):
                    rows.extend([r.graph6, f"{name}.{k}", v] for k, v in value.items())
                elif isinstance(value, list):
                    rows.append([r.graph6, name, " ".join(str(v) for v in value)])
                else:
                    rows.append([r.graph6, name, "" if value is None else value])
        return _csv(CHECK_CSV_HEADER, rows)

    blocks = []
    for r in reports:
        lines = [
            f"graph6: {r.graph6}",
            f"order {r.order}, size {r.size}, degrees {r.degrees}",
            f"connected: {_flag(r.connected)}",
            f"diameter: {'-' if r.diameter is None else r.diameter}",
            f"locally connected: {_flag(r.locally_connected)}",
            f"locally Ore: {_flag(r.locally_ore)}",
            f"locally Dirac: {_flag(r.locally_dirac)}",
            f"common-neighbour condition: {_flag(r.common_neighbor_condition)}",
            f"2δ >= n: {_flag(r.dirac_degree_condition)}",
            f"girth: {r.girth or '-'}  circumference: {r.circumference or '-'}",
            f"hamiltonian: {_flag(r.hamiltonian)}",
            f"weakly pancyclic: {_flag(r.weakly_pancyclic)}",
            f"fully cycle extendable: {_flag(r.fully_cycle_extendable)}"
            + (f" (witness {r.fce_witness})" if r.fce_witness else ""),
        ]
        for name, witness in r.condition_witnesses.items():
            lines.append(f"  {name} fails at {witness}")
        contained = [name for name, free in r.family_free.items() if not free]
        lines.append(f"induced patterns: {', '.join(contained) or '-'}")
        lines.append(f"hypotheses: {', '.join(r.hypotheses) or '-'}")
        lines.extend(f"note: {note}" for note in r.notes)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


# =============================================================================
# Catalog
# =============================================================================


def render_catalog(entries: Sequence[CatalogEntry], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json(entries)
    rows: list[list[object]] = [
        [e.pattern, e.graph6, e.order, e.size, _vertices(e.degrees)] for e in entries
    ]
    if fmt == "csv":
        return _csv(CATALOG_CSV_HEADER, rows)
    width = max(len(e.pattern) for e in entries)
    g6_width = max(len(e.graph6) for e in entries)
    return "\n".join(
        f"{e.pattern:<{width}}  {e.graph6:<{g6_width}}  n={e.order:<2}  m={e.size:<2}  "
        f"degrees {_vertices(e.degrees)}"
        for e in entries
    )
