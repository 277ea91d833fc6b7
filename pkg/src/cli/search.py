# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx search``: hunt for locally connected graphs that are not weakly pancyclic."""

import argparse

from ..config import get_settings
from ..services.config_service import load_profile
from ..services.sweep_service import CONJECTURE, get_sweep_service
from .output import emit, render_sweep


def run(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else load_profile().search.n_max
    source = args.source[1:] if args.source and args.source.startswith("@") else args.source
    report = get_sweep_service().run_conjecture_search(n_max, source)
    emit(render_sweep(report, get_settings().output_format))
    return 0 if report.clean else 1


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "search", parents=[common], help="Search for counterexamples to a conjecture"
    )
    parser.add_argument("--conjecture", choices=[CONJECTURE], default=CONJECTURE)
    parser.add_argument("--n-max", type=int, default=None, help="Largest order (3..8)")
    parser.add_argument("--source", default=None, help="@path to a graph6 file")
    parser.set_defaults(handler=run)
