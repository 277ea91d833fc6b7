# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Executable statements: hypotheses, conclusions, and the proof machinery behind them.

Each :class:`TheoremId` binds a hypothesis predicate and a conclusion predicate over a
graph. :func:`verify_theorem` evaluates both and turns a failed conclusion into a
``violation`` verdict carrying a witness that :func:`witness_revalidates` can re-check.

The common-neighbour theorem is also audited through the objects its proof works with:
the ``A``/``B``/``C`` sets of a cycle neighbour of an outside vertex, the inequality
``|A(u)| > |C(u)|`` under the proof's assumptions, and the successor sequence
``u_1, u_2, ...`` with its bookkeeping sets ``A_k``/``C_k``.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

from ..config import get_settings
from ..errors import HypothesisError, InvariantError, PreconditionError
from ..models.report import LatticeFact
from ..models.verdict import TheoremId, TheoremVerdict, VerdictStatus, Witness
from .cycle_engine import (
    CyclableSet,
    OrderedCycle,
    Outcome,
    Pancyclicity,
    cycle_table,
    enumerate_cycles,
    is_cyclable,
    is_cycle_extendable,
    is_fully_cycle_extendable,
    is_hamiltonian,
    pancyclicity,
)
from .enumeration_io import canonical_certificate, write_graph6
from .graph_core import (
    Graph,
    VertexSet,
    bit,
    degree_profile,
    diameter,
    distance_sets,
    induce,
    is_connected,
    lowest,
    members,
)
from .induced_subgraph import contains_induced, find_induced
from .local_conditions import (
    ConditionReport,
    InducedP3,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    satisfies_common_neighbor_condition,
)
from .pattern_catalog import PatternId, PatternKind, named_graph

logger = logging.getLogger(__name__)


def _pattern(kind: PatternKind) -> Graph:
    return named_graph(PatternId(kind))


# =============================================================================
# Per-graph facts
# =============================================================================


class GraphFacts:
    """Lazily computed properties of one graph, shared by every theorem check."""

    def __init__(self, g: Graph):
        self.g = g
        self._free: dict[PatternKind, bool] = {}

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def locally_connected(self) -> ConditionReport:
        return is_locally_connected(self.g)

    @cached_property
    def locally_ore(self) -> ConditionReport:
        return is_locally_ore(self.g)

    @cached_property
    def locally_dirac(self) -> ConditionReport:
        return is_locally_dirac(self.g)

    @cached_property
    def common_neighbor_condition(self) -> ConditionReport:
        return satisfies_common_neighbor_condition(self.g)

    @cached_property
    def connected_order_3(self) -> bool:
        """Connected of order at least 3, the shared part of every hypothesis."""
        return self.g.n >= 3 and self.connected

    @cached_property
    def locally_connected_base(self) -> bool:
        return self.connected_order_3 and self.locally_connected.holds

    @cached_property
    def min_degree(self) -> int:
        return degree_profile(self.g).min_degree

    @cached_property
    def dirac_degree(self) -> bool:
        """2δ(G) >= n(G)."""
        return 2 * self.min_degree >= self.g.n

    @cached_property
    def fce(self) -> Outcome:
        return is_fully_cycle_extendable(self.g)

    @cached_property
    def spectrum(self) -> Pancyclicity:
        return pancyclicity(self.g)

    @cached_property
    def is_k113(self) -> bool:
        return self.g.n == 5 and canonical_certificate(self.g) == canonical_certificate(
            _pattern(PatternKind.K113)
        )

    @cached_property
    def complete(self) -> bool:
        return self.g.size == self.g.n * (self.g.n - 1) // 2

    def free(self, *kinds: PatternKind) -> bool:
        """Induced-free of every listed catalog graph."""
        for kind in kinds:
            if kind not in self._free:
                self._free[kind] = not contains_induced(self.g, _pattern(kind))
            if not self._free[kind]:
                return False
        return True


@lru_cache(maxsize=256)
def graph_facts(g: Graph) -> GraphFacts:
    return GraphFacts(g)


# =============================================================================
# Paw-free lemma
# =============================================================================


class AuditItem(NamedTuple):
    """One numbered item of the paw-free lemma; ``witness`` names offending vertices."""

    item: str
    passed: bool
    witness: tuple[int, ...] = ()


def _require_paw_free_hypotheses(facts: GraphFacts) -> None:
    if not facts.locally_connected_base:
        raise HypothesisError("Needs a connected locally connected graph of order >= 3")
    if not facts.free(PatternKind.PAW):
        raise HypothesisError("Needs a paw-free graph")


def _criterion(g: Graph, mask: VertexSet) -> bool:
    size = mask.bit_count()
    for u in members(g.vertex_mask & ~mask):
        nbrs = g.adj[u]
        if nbrs & mask and (nbrs & ~mask or 2 * nbrs.bit_count() > size):
            return True
    return False


def extension_criterion(g: Graph, s: CyclableSet | VertexSet) -> bool:
    """Some outside vertex with a neighbour in ``S`` has ``N(u) ⊄ S`` or ``2 d(u) > |S|``.

    Raises :class:`HypothesisError` unless ``g`` is connected, locally connected, paw-free
    and of order at least 3; in that class the criterion decides extendability.
    """
    _require_paw_free_hypotheses(graph_facts(g))
    mask = s.mask if isinstance(s, CyclableSet) else s
    if mask & ~g.vertex_mask or not is_cyclable(g, mask):
        raise PreconditionError(f"{tuple(members(mask))} is not a cyclable set")
    if mask == g.vertex_mask:
        raise PreconditionError("Cyclable set spans the graph")
    return _criterion(g, mask)


def _on_triangle(g: Graph, v: int) -> bool:
    nbrs = g.adj[v]
    return any(g.adj[x] & nbrs for x in members(nbrs))


def _vertex_off_triangles(g: Graph) -> int | None:
    return next((v for v in range(g.n) if not _on_triangle(g, v)), None)


def _second_neighbourhoods_independent(g: Graph) -> AuditItem:
    for u in range(g.n):
        second = distance_sets(g, u, 2)
        for x in members(second):
            if g.adj[x] & second:
                return AuditItem("iii", False, (u, x, lowest(g.adj[x] & second)))
    return AuditItem("iii", True)


def paw_free_audit(g: Graph) -> tuple[AuditItem, ...]:
    """Items (i)-(v) of the paw-free lemma, each with the first offending object."""
    facts = graph_facts(g)
    _require_paw_free_hypotheses(facts)

    off_triangle = _vertex_off_triangles(g)
    item_i = AuditItem("i", off_triangle is None, () if off_triangle is None else (off_triangle,))
    item_ii = AuditItem("ii", diameter(g) <= 2)
    item_iii = _second_neighbourhoods_independent(g)

    table = cycle_table(g)
    full = g.vertex_mask
    circumference = max(table.lengths, default=0)
    item_iv = AuditItem("iv", True)
    item_v = AuditItem("v", True)
    for mask in table.masks:
        if mask == full:
            continue
        extendable = any(table.is_cyclable(mask | bit(u)) for u in members(full & ~mask))
        if item_iv.passed and _criterion(g, mask) != extendable:
            item_iv = AuditItem("iv", False, tuple(members(mask)))
        if item_v.passed and mask.bit_count() < circumference and not extendable:
            item_v = AuditItem("v", False, tuple(members(mask)))
    return (item_i, item_ii, item_iii, item_iv, item_v)


# =============================================================================
# A/B/C sets and the successor sequence
# =============================================================================


class AbcSets(NamedTuple):
    """Vertex-set masks ``A(u)``, ``B(u)``, ``C(u)`` for a cycle, outside vertex ``z`` and ``u``."""

    a: VertexSet
    b: VertexSet
    c: VertexSet


def _check_configuration(g: Graph, cycle: OrderedCycle, z: int, u: int) -> None:
    g.check_vertex(z)
    g.check_vertex(u)
    for v in cycle:
        g.check_vertex(v)
    if not cycle.is_valid(g):
        raise PreconditionError(f"{cycle.vertices} is not a cycle of the graph")
    if z in cycle:
        raise PreconditionError(f"Vertex {z} lies on the cycle")
    if u not in cycle:
        raise PreconditionError(f"Vertex {u} is not on the cycle")
    if not g.has_edge(z, u):
        raise PreconditionError(f"Vertices {z} and {u} are not adjacent")


def _abc(g: Graph, cycle: OrderedCycle, z: int, u: int) -> AbcSets:
    adj = g.adj
    nu = adj[u]
    u_plus = cycle.succ(u)
    common = nu & adj[u_plus] & adj[z] & cycle.mask
    a = b = c = 0
    for v in members(common):
        if nu >> cycle.succ(v) & 1:
            b |= bit(v)
        else:
            a |= bit(v)
    for v in members(nu & adj[z] & cycle.mask & ~adj[u_plus]):
        if nu >> cycle.succ(v) & 1:
            c |= bit(v)
    return AbcSets(a, b, c)


def abc_partition(g: Graph, cycle: OrderedCycle, z: int, u: int) -> AbcSets:
    """``A``/``B``/``C`` of ``u``; successors follow the cycle's fixed orientation.

    The sets are intersected with ``V(C)`` explicitly, so they are defined for every
    outside vertex ``z`` adjacent to ``u``.
    """
    _check_configuration(g, cycle, z, u)
    return _abc(g, cycle, z, u)


def check_abc_laws(g: Graph, cycle: OrderedCycle, z: int, u: int, sets: AbcSets) -> None:
    """Raise :class:`InvariantError` unless the sets are disjoint, on the cycle, and ``A ∪ B``
    is the common neighbourhood of ``u``, ``u^+`` and ``z`` on the cycle."""
    if sets.a & sets.b or sets.a & sets.c or sets.b & sets.c:
        raise InvariantError(f"A/B/C sets overlap for u={u}, z={z}")
    if (sets.a | sets.b | sets.c) & ~cycle.mask:
        raise InvariantError(f"A/B/C sets leave the cycle for u={u}, z={z}")
    adj = g.adj
    common = adj[u] & adj[cycle.succ(u)] & adj[z] & cycle.mask
    if sets.a | sets.b != common:
        raise InvariantError(f"A ∪ B differs from the common neighbourhood for u={u}, z={z}")


@dataclass
class TraceState:
    """Step ``k`` of the successor sequence with its bookkeeping sets (as masks)."""

    k: int
    u_seq: list[int]
    a_k: dict[int, VertexSet] = field(default_factory=dict)
    c_k: dict[int, VertexSet] = field(default_factory=dict)

    def total(self) -> int:
        return sum(m.bit_count() for m in self.a_k.values()) + sum(
            m.bit_count() for m in self.c_k.values()
        )


class TraceOutcome(NamedTuple):
    """``Stalled(k)`` when the choice set ran empty, otherwise ``BoundExceeded``."""

    stalled: bool
    k: int
    state: TraceState

    @property
    def bound_exceeded(self) -> bool:
        return not self.stalled

    def __str__(self) -> str:
        return f"Stalled({self.k})" if self.stalled else "BoundExceeded"


def _check_bookkeeping(state: TraceState, sets: dict[int, AbcSets]) -> None:
    if state.total() != 2 * (state.k - 1):
        raise InvariantError(f"Bookkeeping sum {state.total()} != 2(k-1) at k={state.k}")
    first, last = state.u_seq[0], state.u_seq[-1]
    for x, a_mask in state.a_k.items():
        c_mask = state.c_k[x]
        if a_mask & ~sets[x].a or c_mask & ~sets[x].c:
            raise InvariantError(f"A_k/C_k of {x} escape A/C at k={state.k}")
        expected = 0
        if first != last:
            expected = 1 if x == first else -1 if x == last else 0
        if a_mask.bit_count() - c_mask.bit_count() != expected:
            raise InvariantError(f"Balance law fails at {x} for k={state.k}")


def trace_successor_sequence(g: Graph, cycle: OrderedCycle, z: int, u1: int) -> TraceOutcome:
    """Follow ``u_{k+1} ∈ A(u_k) \\ A_k(u_k)`` (smallest index first) until it stalls.

    The bookkeeping identities are checked at every step and raise
    :class:`InvariantError` when broken. ``BoundExceeded`` is returned once ``k`` passes
    ``n(C)^2 + 1``.
    """
    _check_configuration(g, cycle, z, u1)
    nbrs_on_cycle = g.adj[z] & cycle.mask
    sets = {x: _abc(g, cycle, z, x) for x in members(nbrs_on_cycle)}
    state = TraceState(
        k=1,
        u_seq=[u1],
        a_k=dict.fromkeys(sets, 0),
        c_k=dict.fromkeys(sets, 0),
    )
    bound = cycle.order**2 + 1
    while True:
        _check_bookkeeping(state, sets)
        if state.k > bound:
            return TraceOutcome(False, state.k, state)
        uk = state.u_seq[-1]
        choices = sets[uk].a & ~state.a_k[uk]
        if not choices:
            return TraceOutcome(True, state.k, state)
        nxt = lowest(choices)
        if not sets[nxt].c >> uk & 1:
            raise InvariantError(f"{uk} missing from C({nxt}) at k={state.k}")
        if state.c_k[nxt] >> uk & 1:
            raise InvariantError(f"{uk} already in C_k({nxt}) at k={state.k}")
        state.a_k[uk] |= bit(nxt)
        state.c_k[nxt] |= bit(uk)
        state.u_seq.append(nxt)
        state.k += 1


class MachineryFinding(NamedTuple):
    """A configuration on which a proof-machinery check failed."""

    cycle: tuple[int, ...]
    z: int
    u: int
    detail: str


def _inequality_hypotheses(g: Graph, cycle: OrderedCycle, z: int) -> bool:
    """``z`` misses every successor of its cycle neighbours, and those successors are
    pairwise non-adjacent."""
    adj = g.adj
    succ_mask = 0
    for x in members(adj[z] & cycle.mask):
        succ_mask |= bit(cycle.succ(x))
    if adj[z] & succ_mask:
        return False
    return not any(adj[s] & succ_mask for s in members(succ_mask))


def proof_machinery_audit(g: Graph, with_inequality: bool = True) -> MachineryFinding | None:
    """Check the A/B/C laws, the inequality ``|A(u)| > |C(u)|`` and the successor sequence
    on every (oriented cycle, outside vertex, cycle neighbour) configuration.

    The inequality only follows from the common-neighbour condition, so callers pass
    ``with_inequality=False`` for graphs outside that class.
    """
    adj = g.adj
    for base in enumerate_cycles(g):
        for cycle in (base, base.reversed()):
            for z in members(g.vertex_mask & ~cycle.mask):
                nbrs_on_cycle = adj[z] & cycle.mask
                if not nbrs_on_cycle:
                    continue
                assumptions = with_inequality and _inequality_hypotheses(g, cycle, z)
                for u in members(nbrs_on_cycle):
                    try:
                        sets = _abc(g, cycle, z, u)
                        check_abc_laws(g, cycle, z, u, sets)
                        outside_common = adj[u] & adj[cycle.succ(u)] & adj[z] & ~cycle.mask
                        if (
                            assumptions
                            and not outside_common
                            and sets.a.bit_count() <= sets.c.bit_count()
                        ):
                            return MachineryFinding(
                                cycle.vertices, z, u, "|A(u)| <= |C(u)| under the assumptions"
                            )
                        outcome = trace_successor_sequence(g, cycle, z, u)
                        if outcome.bound_exceeded:
                            return MachineryFinding(cycle.vertices, z, u, "BoundExceeded")
                    except InvariantError as e:
                        return MachineryFinding(cycle.vertices, z, u, str(e))
    return None


# =============================================================================
# Theorems
# =============================================================================

_Hypothesis = Callable[[GraphFacts], bool]
_Conclusion = Callable[[GraphFacts], tuple[str, tuple[int, ...], str] | None]


def _fce_failure(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    outcome = facts.fce
    if outcome.holds:
        return None
    if isinstance(outcome.witness, CyclableSet):
        return ("set", outcome.witness.vertices, "cyclable set is not extendable")
    return ("vertex", (int(outcome.witness or 0),), "vertex lies on no triangle")


def _condition_failure(name: str, report: ConditionReport) -> tuple[str, tuple[int, ...], str]:
    witness = report.witness
    if isinstance(witness, InducedP3):
        return ("pattern", tuple(witness), f"{name} fails on induced path v-u-w")
    return ("vertex", (int(witness or 0),), f"{name} fails at vertex")


def _l1(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    for item in paw_free_audit(facts.g):
        if not item.passed:
            return ("item", item.witness, f"item ({item.item}) fails")
    return None


def _paw_i(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    missing = facts.spectrum.missing
    if not missing:
        return None
    return ("length", (), f"missing cycle orders {list(missing)}")


def _paw_ii(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    if facts.fce.holds == facts.dirac_degree:
        return None
    return (
        "degree",
        (),
        f"FCE={facts.fce.holds} but 2δ={2 * facts.min_degree}, n={facts.g.n}",
    )


def _p1(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    failure = _fce_failure(facts)
    if failure is not None:
        return failure
    if facts.free(PatternKind.K1P3) and not facts.complete:
        return ("pattern", (), "(K1+P3)-free graph is not complete")
    return None


def _p2(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    for kind in (PatternKind.CLAW, PatternKind.K1P3):
        if facts.free(kind):
            return ("pattern", (), f"non-FCE graph is {kind.value}-free")
    return None


def _t6(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    g = facts.g
    if facts.min_degree < 2:
        return ("degree", (), "common-neighbour condition without minimum degree 2")
    off_triangle = _vertex_off_triangles(g)
    if off_triangle is not None:
        return ("vertex", (off_triangle,), "vertex lies on no triangle")
    failure = _fce_failure(facts)
    if failure is not None:
        return failure
    if g.n <= get_settings().machinery_max_order:
        finding = proof_machinery_audit(g)
        if finding is not None:
            return (
                "configuration",
                finding.cycle,
                f"z={finding.z} u={finding.u}: {finding.detail}",
            )
    return None


def _cor1(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    if not facts.common_neighbor_condition.holds:
        return _condition_failure("common-neighbour condition", facts.common_neighbor_condition)
    return _fce_failure(facts)


def _cor2(facts: GraphFacts) -> tuple[str, tuple[int, ...], str] | None:
    if not facts.locally_ore.holds:
        return _condition_failure("locally Ore", facts.locally_ore)
    return _fce_failure(facts)


_THEOREMS: dict[TheoremId, tuple[_Hypothesis, _Conclusion]] = {
    TheoremId.L1: (lambda f: f.locally_connected_base and f.free(PatternKind.PAW), _l1),
    TheoremId.T_PAW_I: (lambda f: f.locally_connected_base and f.free(PatternKind.PAW), _paw_i),
    TheoremId.T_PAW_II: (lambda f: f.locally_connected_base and f.free(PatternKind.PAW), _paw_ii),
    TheoremId.P1: (
        lambda f: f.locally_connected_base
        and (f.free(PatternKind.CLAW) or f.free(PatternKind.K1P3)),
        _p1,
    ),
    TheoremId.P2: (lambda f: f.locally_connected_base and not f.fce.holds, _p2),
    TheoremId.T_GEM: (
        lambda f: f.locally_connected_base and f.free(PatternKind.K113, PatternKind.GEM),
        _fce_failure,
    ),
    TheoremId.T_K1K1P3: (
        lambda f: f.locally_connected_base and f.free(PatternKind.K113, PatternKind.K1_K1UP3),
        _fce_failure,
    ),
    TheoremId.T_TRIPLE: (
        lambda f: f.locally_connected_base
        and f.free(PatternKind.GEM, PatternKind.K14, PatternKind.K2_K1UK2)
        and not f.is_k113,
        _fce_failure,
    ),
    TheoremId.T6: (lambda f: f.connected_order_3 and f.common_neighbor_condition.holds, _t6),
    TheoremId.COR1: (lambda f: f.connected_order_3 and f.locally_ore.holds, _cor1),
    TheoremId.COR2: (lambda f: f.connected_order_3 and f.locally_dirac.holds, _cor2),
    TheoremId.T_ZHANG: (
        lambda f: f.locally_connected_base and f.free(PatternKind.CLAW),
        _fce_failure,
    ),
}


def hypothesis_membership(g: Graph) -> frozenset[TheoremId]:
    """Ids whose hypothesis holds on ``g``."""
    facts = graph_facts(g)
    return frozenset(t for t, (hypothesis, _) in _THEOREMS.items() if hypothesis(facts))


def verify_theorem(g: Graph, theorem: TheoremId) -> TheoremVerdict:
    """``not_applicable`` outside the hypothesis, else the conclusion's verdict."""
    facts = graph_facts(g)
    hypothesis, conclusion = _THEOREMS[theorem]
    if not hypothesis(facts):
        return TheoremVerdict(theorem=theorem, status=VerdictStatus.NOT_APPLICABLE)
    failure = conclusion(facts)
    if failure is None:
        return TheoremVerdict(theorem=theorem, status=VerdictStatus.VERIFIED)
    kind, vertices, detail = failure
    logger.warning(f"{theorem.value} violated on {facts.graph6}: {detail}")
    return TheoremVerdict(
        theorem=theorem,
        status=VerdictStatus.VIOLATION,
        witness=Witness(graph6=facts.graph6, kind=kind, vertices=list(vertices), detail=detail),
    )


def witness_revalidates(g: Graph, verdict: TheoremVerdict) -> bool:
    """Re-check a violation's witness against ``g`` from scratch."""
    witness = verdict.witness
    if verdict.status is not VerdictStatus.VIOLATION or witness is None:
        return False
    if witness.graph6 != write_graph6(g):
        return False
    mask = 0
    for v in witness.vertices:
        if not 0 <= v < g.n:
            return False
        mask |= bit(v)
    match witness.kind:
        case "vertex":
            return len(witness.vertices) == 1 and not _on_triangle(g, witness.vertices[0])
        case "set":
            return (
                mask != g.vertex_mask
                and is_cyclable(g, mask)
                and not is_cycle_extendable(g, mask)
            )
    fresh = verify_theorem(g, verdict.theorem)
    return fresh.status is VerdictStatus.VIOLATION and fresh.witness == witness


# =============================================================================
# Forbidden-subgraph lattice
# =============================================================================


def _connected_locally_connected_non_hamiltonian(name: str, g: Graph) -> LatticeFact:
    facts = graph_facts(g)
    passed = facts.locally_connected_base and not is_hamiltonian(g)
    return LatticeFact(
        name=f"{name} is connected, locally connected, non-hamiltonian",
        passed=passed,
    )


def _subsets_land_in(
    source: Graph, hosts: tuple[Graph, ...], filter_host: Graph | None, proper: bool
) -> tuple[bool, str]:
    full = source.vertex_mask
    for mask in range(1, full + 1):
        if proper and mask == full:
            continue
        sub = induce(source, mask)
        if filter_host is not None and not contains_induced(filter_host, sub):
            continue
        if not any(contains_induced(h, sub) for h in hosts):
            return False, f"induced on {list(members(mask))}"
    return True, ""


def proposition_lattice_checks() -> list[LatticeFact]:
    """Finite containment facts used by the single- and pair-forbidden propositions."""
    k113 = _pattern(PatternKind.K113)
    x = _pattern(PatternKind.X)
    claw = _pattern(PatternKind.CLAW)
    k1p3 = _pattern(PatternKind.K1P3)

    facts = [
        _connected_locally_connected_non_hamiltonian("K1,1,3", k113),
        _connected_locally_connected_non_hamiltonian("X", x),
        LatticeFact(name="K1,1,3 is not induced in X", passed=not contains_induced(x, k113)),
    ]
    passed, detail = _subsets_land_in(k113, (claw, k1p3), x, proper=False)
    facts.append(
        LatticeFact(
            name="common induced subgraphs of K1,1,3 and X are induced in K1,3 or K1+P3",
            passed=passed,
            detail=detail,
        )
    )
    passed, detail = _subsets_land_in(k113, (claw, k1p3), None, proper=True)
    facts.append(
        LatticeFact(
            name="proper induced subgraphs of K1,1,3 are induced in K1,3 or K1+P3",
            passed=passed,
            detail=detail,
        )
    )
    for kind in (PatternKind.GEM, PatternKind.K1_K1UP3):
        witness = find_induced(x, _pattern(kind))
        facts.append(
            LatticeFact(
                name=f"{kind.value} is induced in X",
                passed=witness is not None,
                detail="" if witness is None else f"on {list(witness.host_vertices)}",
            )
        )
    claw_in_x = find_induced(x, claw)
    facts.append(
        LatticeFact(
            name="X contains an induced claw",
            passed=claw_in_x is not None,
            detail="" if claw_in_x is None else f"on {list(claw_in_x.host_vertices)}",
        )
    )
    for name, g in (("K1,1,3", k113), ("X", x)):
        facts.append(
            LatticeFact(
                name=f"{name} is not fully cycle extendable",
                passed=not graph_facts(g).fce.holds,
            )
        )
    for fact in facts:
        if not fact.passed:
            logger.warning(f"Lattice fact failed: {fact.name} {fact.detail}")
    return facts
