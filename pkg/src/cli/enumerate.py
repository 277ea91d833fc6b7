# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx enumerate``: one graph6 line per isomorphism class of a given order."""

import argparse

from ..config import get_settings
from ..services.enumeration_io import enumerate_graphs, write_graph6, write_graph6_file
from .output import emit


def run(args: argparse.Namespace) -> int:
    graphs = enumerate_graphs(args.n, args.connected, get_settings().get_cache_dir())
    if args.output:
        write_graph6_file(args.output, graphs)
        return 0
    lines = [write_graph6(g) for g in graphs]
    if lines:
        emit("\n".join(lines))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "enumerate", parents=[common], help="Write every graph of order n as graph6"
    )
    parser.add_argument("--n", type=int, required=True, help="Order (1..8)")
    parser.add_argument("--connected", action="store_true", help="Connected graphs only")
    parser.add_argument("--output", default=None, help="Write to this file instead of stdout")
    parser.set_defaults(handler=run)
