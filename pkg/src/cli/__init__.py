# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""CLI module."""

import argparse

from .. import __version__
from . import catalog, check, schema, search, verify
from . import enumerate as enumerate_command

# Subcommands in the order they appear in --help
COMMANDS = (check, verify, search, catalog, enumerate_command, schema)


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser; shared flags work before or after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's unset flag from clobbering one given before it
    common.add_argument(
        "--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS
    )
    common.add_argument(
        "--jobs", type=int, default=argparse.SUPPRESS, help="Worker processes (env: LCX_JOBS)"
    )
    common.add_argument(
        "--quiet", action="store_true", default=argparse.SUPPRESS, help="No progress bars"
    )

    parser = argparse.ArgumentParser(
        prog="lcx",
        description="Local connectivity and cycle extendability engine",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, common)
    return parser
