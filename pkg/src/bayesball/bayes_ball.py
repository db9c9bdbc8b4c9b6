"""Mark-based Bayes-Ball traversal.

The ball starts at the targets as if sent up from a child. Each node reacts
to the direction the ball arrived from:

* unobserved, from a child: send to parents (top mark) and, unless the node
  is deterministic, to children (bottom mark);
* observed, from a child: nothing beyond being visited;
* observed, from a parent: bounce back to parents (top mark);
* unobserved, from a parent: pass through to children (bottom mark).

Each mark is set at most once, so every arc is traversed at most once per
direction. The marks are the answer: bottom-unmarked nodes are irrelevant,
top-marked nodes need a distribution, and visited observed nodes are the
observations worth having.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, Union

from .graph import Network

FROM_CHILD = 1
FROM_PARENT = 2

SchedulePolicy = Union[Literal["fifo", "lifo"], random.Random]


@dataclass(frozen=True)
class Query:
    """Targets ``J`` and observations ``K`` for Pr{X_J | X_K}."""

    targets: frozenset[str] = frozenset()
    observed: frozenset[str] = frozenset()

    def __init__(self, targets: Iterable[str] = (), observed: Iterable[str] = ()):
        object.__setattr__(self, "targets", frozenset(targets))
        object.__setattr__(self, "observed", frozenset(observed))


@dataclass(frozen=True)
class TraceEvent:
    node: str
    direction: int
    top: bool
    bottom: bool
    rules: tuple[str, ...] = ()

    def __str__(self) -> str:
        source = {FROM_CHILD: "child", FROM_PARENT: "parent"}.get(self.direction, "both")
        return f"visit {self.node} from={source} top={int(self.top)} bottom={int(self.bottom)}"


@dataclass
class MarkState:
    """All mutable state of one traversal, including its pending schedule."""

    observed: frozenset[str] = frozenset()
    visited: set[str] = field(default_factory=set)
    top: set[str] = field(default_factory=set)
    bottom: set[str] = field(default_factory=set)
    pending: dict[str, int] = field(default_factory=dict)
    received: dict[str, int] = field(default_factory=dict)
    order: deque[str] = field(default_factory=deque)
    visits_executed: int = 0
    arc_traversals: int = 0
    targets_scheduled: int = 0
    replays_scheduled: int = 0

    @property
    def counters(self) -> dict[str, int]:
        return {
            "visits_executed": self.visits_executed,
            "arc_traversals": self.arc_traversals,
            "targets_scheduled": self.targets_scheduled,
            "replays_scheduled": self.replays_scheduled,
        }

    def marks(self) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
        return frozenset(self.visited), frozenset(self.top), frozenset(self.bottom)

    def schedule(self, node: str, direction: int) -> None:
        # one queue entry per node; a second direction just widens the mask
        mask = self.pending.get(node, 0)
        if not mask:
            self.order.append(node)
        self.pending[node] = mask | direction


@dataclass(frozen=True)
class RequisiteResult:
    irrelevant: frozenset[str]
    requisite_probability: frozenset[str]
    requisite_observations: frozenset[str]

    @property
    def minimal_relevant(self) -> frozenset[str]:
        """Older name for requisite probability plus requisite observations."""
        return self.requisite_probability | self.requisite_observations


def _pop(state: MarkState, policy: SchedulePolicy) -> str:
    if policy == "fifo":
        return state.order.popleft()
    if policy == "lifo":
        return state.order.pop()
    i = policy.randrange(len(state.order))
    state.order.rotate(-i)
    node = state.order.popleft()
    state.order.rotate(i)
    return node


def drain(
    net: Network,
    state: MarkState,
    schedule: SchedulePolicy = "fifo",
    trace: Callable[[TraceEvent], None] | None = None,
) -> MarkState:
    """Process scheduled visits until none remain."""
    deterministic = net.deterministic
    observed = state.observed
    visited, top, bottom = state.visited, state.top, state.bottom
    while state.order:
        j = _pop(state, schedule)
        mask = state.pending.pop(j)
        state.visits_executed += 1
        visited.add(j)
        state.received[j] = state.received.get(j, 0) | mask
        fired = []
        if mask & FROM_CHILD and j not in observed:
            if j not in top:
                top.add(j)
                fired.append("child:top")
                for p in net.parent_list(j):
                    state.arc_traversals += 1
                    state.schedule(p, FROM_CHILD)
            if j not in deterministic and j not in bottom:
                bottom.add(j)
                fired.append("child:bottom")
                for c in net.child_list(j):
                    state.arc_traversals += 1
                    state.schedule(c, FROM_PARENT)
        if mask & FROM_PARENT:
            if j in observed:
                if j not in top:
                    top.add(j)
                    fired.append("parent:top")
                    for p in net.parent_list(j):
                        state.arc_traversals += 1
                        state.schedule(p, FROM_CHILD)
            elif j not in bottom:
                bottom.add(j)
                fired.append("parent:bottom")
                for c in net.child_list(j):
                    state.arc_traversals += 1
                    state.schedule(c, FROM_PARENT)
        if trace is not None:
            trace(TraceEvent(j, mask, j in top, j in bottom, tuple(fired)))
    return state


def start(net: Network, q: Query) -> MarkState:
    """A fresh mark state with every target scheduled as if from a child."""
    net.require(q.targets, q.observed)
    state = MarkState(observed=q.observed)
    for j in net.nodes:
        if j in q.targets:
            state.schedule(j, FROM_CHILD)
    state.targets_scheduled = len(q.targets)
    return state


def resume(
    net: Network,
    state: MarkState,
    targets: Iterable[str],
    observed: Iterable[str],
    schedule: SchedulePolicy = "fifo",
    trace: Callable[[TraceEvent], None] | None = None,
    replay: Iterable[str] = (),
) -> MarkState:
    """Continue a finished traversal with a new observed set and extra targets.

    Marks are never cleared, so only shrinking the observed set makes sense.
    Nodes in ``replay`` that leave the observed set get every visit they
    already received delivered again, now as unobserved nodes; senders will
    not resend because their marks are already set.
    """
    targets = frozenset(targets)
    observed = frozenset(observed)
    net.require(targets, observed)
    replay = frozenset(replay) & (state.observed - observed)
    state.observed = observed
    for j in net.nodes:
        if j in targets:
            state.schedule(j, FROM_CHILD)
        if j in replay and j in state.received:
            state.schedule(j, state.received[j])
            state.replays_scheduled += 1
    state.targets_scheduled += len(targets)
    return drain(net, state, schedule, trace)


def run(
    net: Network,
    q: Query,
    schedule: SchedulePolicy = "fifo",
    trace: Callable[[TraceEvent], None] | None = None,
) -> MarkState:
    """Run the traversal for ``q`` to its fixed point."""
    return drain(net, start(net, q), schedule, trace)


def requisites(net: Network, q: Query, marks: MarkState) -> RequisiteResult:
    return RequisiteResult(
        irrelevant=frozenset(n for n in net.nodes if n not in marks.bottom),
        requisite_probability=frozenset(marks.top),
        requisite_observations=frozenset(q.observed & marks.visited),
    )


def query(net: Network, targets: Iterable[str], observed: Iterable[str] = ()) -> RequisiteResult:
    q = Query(targets, observed)
    return requisites(net, q, run(net, q))


def irrelevant(net: Network, targets: Iterable[str], observed: Iterable[str] = ()) -> frozenset[str]:
    """N_i(J|K): nodes irrelevant to the targets given the observations."""
    return query(net, targets, observed).irrelevant


def is_irrelevant(net: Network, targets: Iterable[str], others: Iterable[str], observed: Iterable[str] = ()) -> bool:
    """True iff ``others`` is irrelevant to ``targets`` given ``observed``."""
    others = frozenset(others)
    net.require(others)
    return others <= irrelevant(net, targets, observed)
