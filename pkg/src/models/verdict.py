# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Theorem identifiers and per-graph verdicts."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator


class TheoremId(str, Enum):
    """Statements checked by the theorem suite (values double as CLI ids)."""

    L1 = "L1"  # paw-free lemma, items (i)-(v)
    T_PAW_I = "T_PAW_I"  # paw-free => weakly pancyclic
    T_PAW_II = "T_PAW_II"  # paw-free => (FCE <=> 2δ >= n)
    P1 = "P1"  # claw-free or (K1+P3)-free => FCE
    P2 = "P2"  # non-FCE => contains claw and K1+P3
    T_GEM = "T_GEM"  # {K1,1,3, gem}-free => FCE
    T_K1K1P3 = "T_K1K1P3"  # {K1,1,3, K1+(K1uP3)}-free => FCE
    T_TRIPLE = "T_TRIPLE"  # {gem, K1,4, K2+(K1uK2)}-free, not K1,1,3 => FCE
    T6 = "T6"  # common-neighbour condition => FCE
    COR1 = "COR1"  # locally Ore => FCE
    COR2 = "COR2"  # locally Dirac => FCE
    T_ZHANG = "T_ZHANG"  # claw-free => FCE

    @classmethod
    def parse_many(cls, values: list[str]) -> list["TheoremId"]:
        """Ids from CLI/profile values; ``all`` expands to every id."""
        if any(v.lower() == "all" for v in values):
            return list(cls)
        return [cls(v.upper()) for v in values]


class VerdictStatus(str, Enum):
    NOT_APPLICABLE = "not_applicable"
    VERIFIED = "verified"
    VIOLATION = "violation"


class Witness(BaseModel):
    """Concrete object a Violation points at, re-checkable with ``lcx check``."""

    graph6: str
    kind: str  # vertex | set | length | degree | item | pattern | configuration
    vertices: list[int] = Field(default_factory=list)
    detail: str = ""


class TheoremVerdict(BaseModel):
    """Outcome of one (graph, theorem) pair."""

    theorem: TheoremId
    status: VerdictStatus
    witness: Witness | None = None

    @model_validator(mode="after")
    def _witness_iff_violation(self) -> "TheoremVerdict":
        if (self.status is VerdictStatus.VIOLATION) != (self.witness is not None):
            raise ValueError("A witness is required exactly for violations")
        return self

    @property
    def applicable(self) -> bool:
        return self.status is not VerdictStatus.NOT_APPLICABLE
