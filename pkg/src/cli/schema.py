# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""``lcx schema``: JSON schema of the reports emitted with ``--format json``."""

import argparse
import json
from typing import Any

from ..models.report import CatalogEntry, CheckReport, SweepReport
from .output import emit


def report_schemas() -> dict[str, Any]:
    return {
        "SweepReport": SweepReport.model_json_schema(),
        "CheckReport": CheckReport.model_json_schema(),
        "CatalogEntry": CatalogEntry.model_json_schema(),
    }


def run(args: argparse.Namespace) -> int:
    emit(json.dumps(report_schemas(), indent=2, sort_keys=True))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("schema", parents=[common], help="Print the report schemas")
    parser.set_defaults(handler=run)
