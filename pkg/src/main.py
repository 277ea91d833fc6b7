# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""lcx - command-line entry point.

Exit codes: 0 clean, 1 violation or finding, 2 usage or input error.
"""

import argparse
import logging
import sys

import yaml

from .cli import build_parser
from .config import get_settings
from .errors import LcxError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def apply_overrides(args: argparse.Namespace) -> None:
    """Copy global CLI flags onto the cached settings (flags beat LCX_* variables)."""
    settings = get_settings()
    if "format" in args:
        settings.output_format = args.format
    if "jobs" in args:
        settings.jobs = args.jobs
    if getattr(args, "quiet", False):
        settings.progress = False


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    apply_overrides(args)
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return int(args.handler(args))
    except (LcxError, OSError, ValueError, yaml.YAMLError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"lcx: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
