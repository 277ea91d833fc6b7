# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Sweep profile (``lcx.yaml``): defaults for ``verify`` and ``search`` flags."""

from pydantic import BaseModel, ConfigDict, Field


class VerifyProfile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    theorems: list[str] = Field(default_factory=lambda: ["all"])
    n_max: int = Field(default=6, ge=3, le=8)


class SearchProfile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_max: int = Field(default=7, ge=3, le=8)


class SweepProfile(BaseModel):
    """Sections absent from the file keep their defaults."""

    model_config = ConfigDict(extra="forbid")

    verify: VerifyProfile = Field(default_factory=VerifyProfile)
    search: SearchProfile = Field(default_factory=SearchProfile)
