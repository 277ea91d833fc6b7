# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx check``: every flag the engine knows for one graph (or every graph of a file)."""

import argparse
import math

from ..config import get_settings
from ..models.report import CheckReport
from ..services.cycle_engine import CyclableSet, is_hamiltonian, pancyclicity
from ..services.enumeration_io import parse_graph6, read_graph6_file
from ..services.graph_core import Graph, degree_profile, diameter
from ..services.induced_subgraph import contains_induced
from ..services.pattern_catalog import catalog_ids, named_graph
from ..services.theorem_suite import graph_facts, hypothesis_membership
from .output import emit, render_check


def build_check_report(g: Graph) -> CheckReport:
    facts = graph_facts(g)
    profile = degree_profile(g)
    dist = diameter(g)
    witnesses = {
        name: str(tuple(report.witness) if isinstance(report.witness, tuple) else report.witness)
        for name, report in (
            ("locally connected", facts.locally_connected),
            ("locally Ore", facts.locally_ore),
            ("locally Dirac", facts.locally_dirac),
            ("common-neighbour condition", facts.common_neighbor_condition),
        )
        if not report.holds
    }
    report = CheckReport(
        graph6=facts.graph6,
        order=g.n,
        size=g.size,
        degrees=list(profile.degrees),
        connected=facts.connected,
        diameter=None if dist == math.inf else int(dist),
        locally_connected=facts.locally_connected.holds,
        locally_ore=facts.locally_ore.holds,
        locally_dirac=facts.locally_dirac.holds,
        common_neighbor_condition=facts.common_neighbor_condition.holds,
        condition_witnesses=witnesses,
        family_free={
            str(pid): not contains_induced(g, named_graph(pid))
            for pid in catalog_ids()
            if named_graph(pid).n <= g.n
        },
        dirac_degree_condition=facts.dirac_degree,
    )

    if g.n > get_settings().spectrum_max_order:
        report.notes.append(
            f"order {g.n} exceeds spectrum_max_order; cycle properties and hypotheses skipped"
        )
        return report

    spectrum = pancyclicity(g)
    report.girth = spectrum.girth
    report.circumference = spectrum.circumference
    report.acyclic = spectrum.acyclic
    report.hamiltonian = is_hamiltonian(g)
    report.weakly_pancyclic = spectrum.weakly_pancyclic
    report.fully_cycle_extendable = facts.fce.holds
    if not facts.fce.holds:
        witness = facts.fce.witness
        if isinstance(witness, CyclableSet):
            report.fce_witness = f"set {list(witness.vertices)}"
        else:
            report.fce_witness = f"vertex {witness}"
    report.hypotheses = sorted(t.value for t in hypothesis_membership(g))
    return report


def run(args: argparse.Namespace) -> int:
    if args.graph.startswith("@"):
        graphs = list(read_graph6_file(args.graph[1:]))
        single = False
    else:
        graphs = [parse_graph6(args.graph)]
        single = True
    reports = [build_check_report(g) for g in graphs]
    emit(render_check(reports, get_settings().output_format, single))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "check", parents=[common], help="Inspect one graph6 record or every record of @file"
    )
    parser.add_argument("graph", help="graph6 text, or @path to a graph6 file")
    parser.set_defaults(handler=run)

