# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Pydantic models."""

from .profile import SearchProfile, SweepProfile, VerifyProfile
from .report import (
    CatalogEntry,
    CheckReport,
    Finding,
    LatticeFact,
    SkippedGraph,
    SweepReport,
    TheoremCounters,
)
from .verdict import TheoremId, TheoremVerdict, VerdictStatus, Witness

__all__ = [
    "CatalogEntry",
    "CheckReport",
    "Finding",
    "LatticeFact",
    "SearchProfile",
    "SkippedGraph",
    "SweepProfile",
    "SweepReport",
    "TheoremCounters",
    "TheoremId",
    "TheoremVerdict",
    "VerdictStatus",
    "VerifyProfile",
    "Witness",
]
