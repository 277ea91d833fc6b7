# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx verify``: theorem sweeps over the built-in enumeration or a graph6 file."""

import argparse

from ..config import get_settings
from ..models.verdict import TheoremId
from ..services.config_service import load_profile
from ..services.sweep_service import get_sweep_service
from .output import emit, render_sweep


def run(args: argparse.Namespace) -> int:
    profile = load_profile().verify
    theorems = TheoremId.parse_many(args.theorem or profile.theorems)
    n_max = args.n_max if args.n_max is not None else profile.n_max
    source = args.source[1:] if args.source and args.source.startswith("@") else args.source
    report = get_sweep_service().run_verify(theorems, n_max, source)
    emit(render_sweep(report, get_settings().output_format))
    return 0 if report.clean else 1


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify", parents=[common], help="Sweep theorem statements")
    parser.add_argument(
        "--theorem",
        action="append",
        metavar="ID",
        help=f"Theorem id or 'all' (repeatable): {', '.join(t.value for t in TheoremId)}",
    )
    parser.add_argument("--n-max", type=int, default=None, help="Largest order (3..8)")
    parser.add_argument("--source", default=None, help="@path to a graph6 file")
    parser.set_defaults(handler=run)
