"""Structural network model: typed nodes, arcs, validation and graph primitives.

Nothing here knows about probabilities. A network is a directed graph whose
nodes carry a kind (chance, deterministic, decision, value); everything the
traversal algorithms need is derived from the arcs and the deterministic
subset.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Literal, Sequence

Mode = Literal["belief-network", "influence-diagram"]


class GraphError(Exception):
    """Base class for structural errors."""


class UnknownNodeError(GraphError, KeyError):
    def __init__(self, ids):
        self.ids = tuple(sorted(ids, key=node_sort_key))
        super().__init__(f"unknown node id(s): {', '.join(self.ids)}")

    def __str__(self):
        return self.args[0]


class CycleError(GraphError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("directed cycle through " + " -> ".join(self.cycle))


class NodeKind(str, Enum):
    CHANCE = "chance"
    DETERMINISTIC = "deterministic"
    DECISION = "decision"
    VALUE = "value"


def node_sort_key(node_id: str):
    """Sort numeric ids numerically, everything else lexically after them."""
    if node_id.isdigit():
        return (0, int(node_id), node_id)
    return (1, 0, node_id)


def sorted_ids(ids: Iterable[str]) -> list[str]:
    return sorted(ids, key=node_sort_key)


class Network:
    """Immutable directed graph of typed nodes.

    Construction rejects malformed node declarations (empty or repeated ids,
    unknown kinds). Arc-level faults (dangling endpoints, self-arcs,
    duplicates, cycles) are accepted here and reported by :func:`validate`,
    so a broken document can still be inspected.
    """

    def __init__(self, nodes: Iterable[tuple[str, NodeKind | str]], arcs: Iterable[tuple[str, str]] = ()):
        kinds: dict[str, NodeKind] = {}
        for node_id, kind in nodes:
            if not isinstance(node_id, str) or not node_id:
                raise GraphError(f"node id must be a non-empty string, got {node_id!r}")
            if node_id in kinds:
                raise GraphError(f"duplicate node id {node_id!r}")
            kinds[node_id] = NodeKind(kind)
        self._kinds = kinds
        self._nodes = tuple(kinds)
        self._arcs = tuple((str(a), str(b)) for a, b in arcs)

        index = {n: i for i, n in enumerate(self._nodes)}
        parents: dict[str, list[str]] = {n: [] for n in self._nodes}
        children: dict[str, list[str]] = {n: [] for n in self._nodes}
        for a, b in dict.fromkeys(self._arcs):
            if a in kinds and b in kinds and a != b:
                parents[b].append(a)
                children[a].append(b)
        # adjacency follows declaration order so traversals are reproducible
        self._parents = {n: tuple(sorted(ps, key=index.__getitem__)) for n, ps in parents.items()}
        self._children = {n: tuple(sorted(cs, key=index.__getitem__)) for n, cs in children.items()}

    # -- basic accessors -------------------------------------------------
    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        return self._arcs

    def kind(self, node_id: str) -> NodeKind:
        self.require(node_id)
        return self._kinds[node_id]

    @property
    def kinds(self) -> dict[str, NodeKind]:
        return dict(self._kinds)

    def __contains__(self, node_id) -> bool:
        return node_id in self._kinds

    def __len__(self) -> int:
        return len(self._nodes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return list(self._kinds.items()) == list(other._kinds.items()) and self._arcs == other._arcs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Network({len(self._nodes)} nodes, {len(self._arcs)} arcs)"

    def require(self, *groups: str | Iterable[str]) -> None:
        """Raise :class:`UnknownNodeError` unless every id in ``groups`` exists."""
        missing = set()
        for g in groups:
            ids = (g,) if isinstance(g, str) else g
            missing.update(i for i in ids if i not in self._kinds)
        if missing:
            raise UnknownNodeError(missing)

    def parent_list(self, node_id: str) -> tuple[str, ...]:
        return self._parents[node_id]

    def child_list(self, node_id: str) -> tuple[str, ...]:
        return self._children[node_id]

    def nodes_of_kind(self, *kinds: NodeKind) -> tuple[str, ...]:
        return tuple(n for n in self._nodes if self._kinds[n] in kinds)

    @cached_property
    def deterministic(self) -> frozenset[str]:
        """The deterministic subset F."""
        return frozenset(self.nodes_of_kind(NodeKind.DETERMINISTIC))

    @cached_property
    def informational_arcs(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (a, b) for a, b in self._arcs if b in self._kinds and self._kinds[b] is NodeKind.DECISION
        )

    @cached_property
    def masked(self) -> Network:
        """The same network with every informational arc removed."""
        if not self.informational_arcs:
            return self
        info = set(self.informational_arcs)
        return Network(self._kinds.items(), [arc for arc in self._arcs if arc not in info])

    @cached_property
    def topological_order(self) -> tuple[str, ...]:
        """Topological order, ties broken by :func:`node_sort_key`.

        Raises :class:`CycleError` if the arcs contain a cycle.
        """
        indegree = {n: len(self._parents[n]) for n in self._nodes}
        heap = [(node_sort_key(n), n) for n, d in indegree.items() if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            _, n = heapq.heappop(heap)
            order.append(n)
            for c in self._children[n]:
                indegree[c] -= 1
                if indegree[c] == 0:
                    heapq.heappush(heap, (node_sort_key(c), c))
        if len(order) != len(self._nodes):
            raise CycleError(_find_cycle(self, set(self._nodes) - set(order)))
        return tuple(order)


def _find_cycle(net: Network, candidates: set[str]) -> list[str]:
    # every leftover node of Kahn's algorithm has a leftover parent; walk back until repeat
    node = min(candidates, key=node_sort_key)
    seen: dict[str, int] = {}
    path = []
    while node not in seen:
        seen[node] = len(path)
        path.append(node)
        node = next(p for p in net.parent_list(node) if p in candidates)
    cycle = path[seen[node]:]
    cycle.reverse()
    return cycle + [cycle[0]]


def parents(net: Network, j: str) -> frozenset[str]:
    """Parents of ``j``, informational arcs included."""
    net.require(j)
    return frozenset(net.parent_list(j))


def children(net: Network, j: str) -> frozenset[str]:
    net.require(j)
    return frozenset(net.child_list(j))


def descendants(net: Network, j: str, ignore_informational: bool = False) -> frozenset[str]:
    """Proper descendants of ``j``; optionally without following informational arcs."""
    net.require(j)
    graph = net.masked if ignore_informational else net
    seen: set[str] = set()
    stack = list(graph.child_list(j))
    while stack:
        n = stack.pop()
        if n not in seen:
            seen.add(n)
            stack.extend(graph.child_list(n))
    seen.discard(j)
    return frozenset(seen)


def ancestors(net: Network, j: str, ignore_informational: bool = False) -> frozenset[str]:
    net.require(j)
    graph = net.masked if ignore_informational else net
    seen: set[str] = set()
    stack = list(graph.parent_list(j))
    while stack:
        n = stack.pop()
        if n not in seen:
            seen.add(n)
            stack.extend(graph.parent_list(n))
    seen.discard(j)
    return frozenset(seen)


def functionally_determined(net: Network, observed: Iterable[str]) -> frozenset[str]:
    """Nodes whose values are fixed once ``observed`` is known.

    Least fixed point of ``K ∪ {i in F : Pa(i) ⊆ F_K}``, computed with a
    worklist that counts each deterministic node's undetermined parents.
    """
    observed = frozenset(observed)
    net.require(observed)
    determined = set(observed)
    # undetermined-parent counts; each determined node decrements its children once
    missing = {i: len(net.parent_list(i)) for i in net.deterministic if i not in determined}
    work = deque(determined)
    for i, count in missing.items():
        if count == 0:
            determined.add(i)
            work.append(i)
    while work:
        n = work.popleft()
        for c in net.child_list(n):
            if c in missing and c not in determined:
                missing[c] -= 1
                if missing[c] == 0:
                    determined.add(c)
                    work.append(c)
    return frozenset(determined)


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    ids: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Finding, ...] = ()
    warnings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {f.code for f in self.errors}

    def __str__(self) -> str:
        lines = [f"error {f}" for f in self.errors] + [f"warning {f}" for f in self.warnings]
        return "\n".join(lines) or "ok"


@dataclass
class _Collector:
    errors: list[Finding] = field(default_factory=list)
    warnings: list[Finding] = field(default_factory=list)

    def error(self, code, message, *ids):
        self.errors.append(Finding(code, message, tuple(ids)))

    def warn(self, code, message, *ids):
        self.warnings.append(Finding(code, message, tuple(ids)))


def validate(net: Network, mode: Mode = "belief-network", decision_order: Sequence[str] | None = None) -> ValidationReport:
    """Check the structural assumptions a query relies on.

    ``decision_order`` is only consulted in influence-diagram mode, to warn
    when the last decision cannot influence any value node.
    """
    if mode not in ("belief-network", "influence-diagram"):
        raise ValueError(f"unknown validation mode {mode!r}")
    out = _Collector()
    seen_arcs = set()
    for a, b in net.arcs:
        if a not in net or b not in net:
            missing = [x for x in (a, b) if x not in net]
            out.error("dangling-arc", f"arc {a} -> {b} references unknown node(s) {', '.join(missing)}", a, b)
        elif a == b:
            out.error("self-arc", f"self-arc on {a}", a)
        elif (a, b) in seen_arcs:
            out.error("duplicate-arc", f"arc {a} -> {b} declared more than once", a, b)
        seen_arcs.add((a, b))

    try:
        net.topological_order
    except CycleError as exc:
        out.error("cycle", str(exc), *exc.cycle[:-1])

    decisions = net.nodes_of_kind(NodeKind.DECISION)
    values = net.nodes_of_kind(NodeKind.VALUE)
    if mode == "belief-network":
        for n in decisions + values:
            out.error("kind-not-allowed", f"{net.kind(n).value} node {n} in a belief network", n)
    else:
        for v in values:
            if net.child_list(v):
                out.error("value-has-children", f"value node {v} has children {', '.join(net.child_list(v))}", v)
            if not net.parent_list(v):
                out.error("value-without-parents", f"value node {v} has no incoming arcs", v)
        if not values:
            out.warn("no-value-nodes", "influence diagram has no value nodes")
        if decision_order and not out.errors:
            last = decision_order[-1]
            if last in net and values and not descendants(net, last, True) & set(values):
                out.warn("last-decision-without-value", f"last decision {last} has no value descendant", last)
    return ValidationReport(tuple(out.errors), tuple(out.warnings))
