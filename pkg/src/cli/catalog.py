# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx catalog``: named graphs with their graph6 text and degree sequences."""

import argparse

from ..config import get_settings
from ..models.report import CatalogEntry
from ..services.enumeration_io import write_graph6
from ..services.graph_core import degree_profile
from ..services.pattern_catalog import catalog_ids, named_graph
from .output import emit, render_catalog


def catalog_entries() -> list[CatalogEntry]:
    entries = []
    for pid in catalog_ids():
        g = named_graph(pid)
        entries.append(
            CatalogEntry(
                pattern=str(pid),
                graph6=write_graph6(g),
                order=g.n,
                size=g.size,
                degrees=list(degree_profile(g).degrees),
            )
        )
    return entries


def run(args: argparse.Namespace) -> int:
    emit(render_catalog(catalog_entries(), get_settings().output_format))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("catalog", parents=[common], help="List named graphs")
    parser.set_defaults(handler=run)
