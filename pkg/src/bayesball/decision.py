"""Requisite information for influence diagrams with ordered decisions.

Decisions are processed last to first. Every stage continues the same mark
state: the observed set shrinks to what is known at the earlier decision,
that stage's value nodes plus the later stage's requisite observations are
sent in as new targets, and nodes that just stopped being observed replay
the visits they received. Informational arcs are never traversed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Literal

from . import bayes_ball
from .bayes_ball import MarkState, Query
from .graph import GraphError, Network, NodeKind, ValidationReport, ancestors, descendants, validate

Aggregation = Literal["sum", "product"]


class DiagramError(GraphError):
    pass


class TemporalOrderError(DiagramError):
    pass


class RequisiteWarning(UserWarning):
    pass


@dataclass(frozen=True)
class InfluenceDiagram:
    net: Network
    decision_order: tuple[str, ...] = ()
    evidence: frozenset[str] = frozenset()
    value_aggregation: Aggregation = "sum"

    def __post_init__(self):
        object.__setattr__(self, "decision_order", tuple(self.decision_order))
        object.__setattr__(self, "evidence", frozenset(self.evidence))
        net = self.net
        net.require(self.decision_order, self.evidence)
        if len(set(self.decision_order)) != len(self.decision_order):
            raise DiagramError("decision_order repeats a decision")
        if set(self.decision_order) != set(net.nodes_of_kind(NodeKind.DECISION)):
            raise DiagramError("decision_order must list exactly the decision nodes")
        bad = [e for e in self.evidence if net.kind(e) not in (NodeKind.CHANCE, NodeKind.DETERMINISTIC)]
        if bad:
            raise DiagramError(f"evidence may only contain chance or deterministic nodes: {', '.join(sorted(bad))}")
        if self.value_aggregation not in ("sum", "product"):
            raise DiagramError(f"unknown value aggregation {self.value_aggregation!r}")

    @property
    def nonnegative_attested(self) -> bool:
        # choosing a product declares nonnegative factors; never checked numerically
        return self.value_aggregation == "product"

    @property
    def values(self) -> tuple[str, ...]:
        return self.net.nodes_of_kind(NodeKind.VALUE)

    def validate(self) -> ValidationReport:
        return validate(self.net, "influence-diagram", self.decision_order)


@dataclass(frozen=True)
class InformationSets:
    newly_observed: tuple[frozenset[str], ...]  # W_1..W_m
    known: tuple[frozenset[str], ...]  # I(d_1)..I(d_m)


def information_sets(diagram: InfluenceDiagram) -> InformationSets:
    """No-forgetting information sets built from the informational arcs.

    Raises :class:`TemporalOrderError` when an arc into a decision comes
    from something only knowable after that decision.
    """
    net = diagram.net
    order = diagram.decision_order
    position = {d: i for i, d in enumerate(order)}
    for a, d in net.informational_arcs:
        i = position[d]
        if net.kind(a) is NodeKind.DECISION and position[a] >= i:
            raise TemporalOrderError(f"decision {a} informs earlier decision {d}")
    for i, d in enumerate(order):
        later = [x for x in order[i + 1:] if x in ancestors(net, d)]
        if later:
            raise TemporalOrderError(f"decision {d} depends on later decision {later[0]}")
        late_evidence = sorted(e for e in diagram.evidence if e in descendants(net, d))
        if late_evidence:
            raise TemporalOrderError(f"evidence {late_evidence[0]} is a descendant of decision {d}")

    ws, known = [], []
    previous: frozenset[str] = frozenset(diagram.evidence)
    for i, d in enumerate(order):
        w = frozenset(
            p for p in net.parent_list(d)
            if net.kind(p) is not NodeKind.DECISION and p not in previous
        )
        current = w | previous
        ws.append(w)
        known.append(current)
        previous = current | {d}
    return InformationSets(tuple(ws), tuple(known))


def relevant_values(diagram: InfluenceDiagram, i: int) -> frozenset[str]:
    """Value nodes whose expectation decision ``i`` (1-based) is chosen to maximize."""
    order = diagram.decision_order
    m = len(order)
    if not 1 <= i <= m:
        raise IndexError(f"stage {i} outside 1..{m}")
    values = frozenset(diagram.values)
    result = values & descendants(diagram.net, order[i - 1], ignore_informational=True)
    # a value reachable from a later decision belongs to that later stage only
    for later in order[i:]:
        result -= descendants(diagram.net, later, ignore_informational=True)
    if i == m and not result and values:
        warnings.warn(f"last decision {order[-1]} has no value descendants", RequisiteWarning, stacklevel=2)
    return result


@dataclass(frozen=True)
class Stage:
    index: int
    decision: str | None
    requisite_observations: frozenset[str]
    requisite_probability: frozenset[str]
    irrelevant: bool = False


@dataclass(frozen=True)
class DecisionRequisites:
    stages: tuple[Stage, ...]  # index m first, stage 0 last
    irrelevant_decisions: tuple[str, ...]
    marks: MarkState
    value_aggregation: Aggregation = "sum"

    def stage(self, i: int) -> Stage:
        for s in self.stages:
            if s.index == i:
                return s
        raise KeyError(i)

    def table(self) -> list[tuple[int, str | None, frozenset[str], frozenset[str], bool]]:
        return [(s.index, s.decision, s.requisite_observations, s.requisite_probability, s.irrelevant) for s in self.stages]


def _stage_plan(diagram: InfluenceDiagram):
    info = information_sets(diagram)
    m = len(diagram.decision_order)
    return info, [relevant_values(diagram, i) for i in range(1, m + 1)]


def decision_requisites(diagram: InfluenceDiagram, schedule: bayes_ball.SchedulePolicy = "fifo", trace=None) -> DecisionRequisites:
    """Per-stage requisite observations and distributions in one linear sweep."""
    report = diagram.validate()
    if not report.ok:
        raise DiagramError(str(report))
    net = diagram.net.masked
    order = diagram.decision_order
    info, values = _stage_plan(diagram)
    m = len(order)
    # later decisions are policies by now; everything else that stops being
    # observed hears again what it heard while observed
    chance_like = [n for n in net.nodes if net.kind(n) is not NodeKind.DECISION]

    stages = []
    irrelevant = []
    state = MarkState()
    carried: frozenset[str] = frozenset()  # requisite observations of the later stage
    for i in range(m, 0, -1):
        d = order[i - 1]
        observed = info.known[i - 1] | {d}
        targets = values[i - 1] | carried
        if i == m:
            state = bayes_ball.start(net, Query(targets, observed))
            bayes_ball.drain(net, state, schedule, trace)
        else:
            bayes_ball.resume(net, state, targets, observed, schedule, trace, replay=chance_like)
        carried = frozenset(state.visited & info.known[i - 1])
        skipped = d not in state.visited
        if skipped:
            irrelevant.append(d)
        stages.append(Stage(i, d, carried, frozenset(state.top), skipped))

    if m == 0:
        state = bayes_ball.start(net, Query((), diagram.evidence))
        bayes_ball.drain(net, state, schedule, trace)
    else:
        bayes_ball.resume(net, state, carried, diagram.evidence, schedule, trace, replay=chance_like)
    stages.append(Stage(0, None, frozenset(state.visited & diagram.evidence), frozenset(state.top)))
    return DecisionRequisites(tuple(stages), tuple(irrelevant), state, diagram.value_aggregation)


def restart_requisites(diagram: InfluenceDiagram) -> DecisionRequisites:
    """Same sets, but every stage is a fresh traversal; marks are pooled across stages."""
    report = diagram.validate()
    if not report.ok:
        raise DiagramError(str(report))
    net = diagram.net.masked
    order = diagram.decision_order
    info, values = _stage_plan(diagram)
    m = len(order)

    pooled = MarkState()

    def fresh(targets: Iterable[str], observed: Iterable[str]) -> None:
        q = Query(targets, observed)
        state = bayes_ball.run(net, q)
        pooled.observed = q.observed
        pooled.visited |= state.visited
        pooled.top |= state.top
        pooled.bottom |= state.bottom
        pooled.visits_executed += state.visits_executed
        pooled.arc_traversals += state.arc_traversals
        pooled.targets_scheduled += state.targets_scheduled

    stages = []
    irrelevant = []
    carried: frozenset[str] = frozenset()
    for i in range(m, 0, -1):
        d = order[i - 1]
        fresh(values[i - 1] | carried, info.known[i - 1] | {d})
        carried = frozenset(pooled.visited & info.known[i - 1])
        skipped = d not in pooled.visited
        if skipped:
            irrelevant.append(d)
        stages.append(Stage(i, d, carried, frozenset(pooled.top), skipped))
    fresh(carried, diagram.evidence)
    stages.append(Stage(0, None, frozenset(pooled.visited & diagram.evidence), frozenset(pooled.top)))
    return DecisionRequisites(tuple(stages), tuple(irrelevant), pooled, diagram.value_aggregation)


def format_table(result: DecisionRequisites, sort=sorted) -> str:
    """Plain-text table with one row per stage, last decision first."""
    rows = [("i", "decision", "N_e^i", "N_p^i", "irrelevant")]
    for s in result.stages:
        rows.append((
            str(s.index),
            s.decision or "-",
            ", ".join(sort(s.requisite_observations)) or "-",
            ", ".join(sort(s.requisite_probability)) or "-",
            "yes" if s.irrelevant else "no" if s.decision else "-",
        ))
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)

