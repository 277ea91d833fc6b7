# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Report models emitted by the CLI (their JSON schema is what ``lcx schema`` prints)."""

from typing import Any

from pydantic import BaseModel, Field, model_validator

from .verdict import TheoremVerdict, VerdictStatus, Witness


class TheoremCounters(BaseModel):
    """Per-theorem tallies over a sweep."""

    examined: int = 0
    applicable: int = 0
    verified: int = 0
    violations: int = 0

    @model_validator(mode="after")
    def _consistent(self) -> "TheoremCounters":
        if self.applicable != self.verified + self.violations:
            raise ValueError("applicable must equal verified + violations")
        if self.examined < self.applicable:
            raise ValueError("examined must be >= applicable")
        return self

    def add(self, verdict: TheoremVerdict) -> None:
        self.examined += 1
        if verdict.status is VerdictStatus.NOT_APPLICABLE:
            return
        self.applicable += 1
        if verdict.status is VerdictStatus.VERIFIED:
            self.verified += 1
        else:
            self.violations += 1


class Finding(BaseModel):
    """A violation, a conjecture counterexample, or a failed lattice fact."""

    source: str  # theorem id, "ryjacek", or "lattice"
    order: int
    graph6: str
    detail: str = ""
    witness: Witness | None = None


class SkippedGraph(BaseModel):
    """A sweep input left out because its cycle tables exceed capacity."""

    order: int
    graph6: str
    reason: str


class LatticeFact(BaseModel):
    """One containment/structure fact used by the forbidden-subgraph propositions."""

    name: str
    passed: bool
    detail: str = ""


class SweepReport(BaseModel):
    """Result of ``verify`` or ``search``; wall time is kept out of the findings."""

    command: str
    config: dict[str, Any] = Field(default_factory=dict)
    counters: dict[str, TheoremCounters] = Field(default_factory=dict)
    findings: list[Finding] = Field(default_factory=list)
    lattice: list[LatticeFact] = Field(default_factory=list)
    skipped: list[SkippedGraph] = Field(default_factory=list)
    wall_time_seconds: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.findings


class CheckReport(BaseModel):
    """Everything ``lcx check`` knows about one graph."""

    graph6: str
    order: int
    size: int
    degrees: list[int]
    connected: bool
    diameter: int | None  # None when disconnected
    locally_connected: bool
    locally_ore: bool
    locally_dirac: bool
    common_neighbor_condition: bool
    condition_witnesses: dict[str, str] = Field(default_factory=dict)
    family_free: dict[str, bool] = Field(default_factory=dict)
    dirac_degree_condition: bool  # 2δ(G) >= n(G)
    girth: int | None = None
    circumference: int | None = None
    acyclic: bool | None = None
    hamiltonian: bool | None = None
    weakly_pancyclic: bool | None = None
    fully_cycle_extendable: bool | None = None
    fce_witness: str | None = None
    hypotheses: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)


class CatalogEntry(BaseModel):
    pattern: str
    graph6: str
    order: int
    size: int
    degrees: list[int]
