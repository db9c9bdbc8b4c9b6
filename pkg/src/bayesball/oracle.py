"""Brute-force references for irrelevance and requisite sets.

Everything here enumerates simple trails directly from the active-path
definition and recomputes determinism and descendants with its own naive
routines. It shares no traversal code with :mod:`bayesball.bayes_ball` and
is exponential on purpose; use it only on small networks.
"""

from __future__ import annotations

from typing import Iterable

from .graph import GraphError, Network, NodeKind

GUARD_LIMIT = 14


class OracleSizeError(GraphError):
    def __init__(self, size: int, limit: int):
        self.size, self.limit = size, limit
        super().__init__(f"oracle refuses networks with {size} nodes (limit {limit})")


class _Graph:
    """Plain adjacency snapshot used by the trail enumeration."""

    def __init__(self, net: Network, chance: str | None = None, extra_parent: tuple[str, str] | None = None):
        self.nodes = list(net.nodes)
        self.parents = {n: set() for n in self.nodes}
        self.children = {n: set() for n in self.nodes}
        for a, b in net.arcs:
            self.parents[b].add(a)
            self.children[a].add(b)
        self.det = {n for n in self.nodes if net.kind(n) is NodeKind.DETERMINISTIC}
        if chance is not None:
            self.det.discard(chance)
        if extra_parent is not None:
            p, child = extra_parent
            self.nodes.append(p)
            self.parents[p] = set()
            self.children[p] = {child}
            self.parents[child].add(p)

    def determined_by(self, observed: set[str]) -> set[str]:
        fk = set(observed)
        changed = True
        while changed:
            changed = False
            for i in self.det:
                if i not in fk and self.parents[i] <= fk:
                    fk.add(i)
                    changed = True
        return fk

    def has_descendant_in(self, node: str, observed: set[str]) -> bool:
        seen = set()
        stack = list(self.children[node])
        while stack:
            n = stack.pop()
            if n in observed:
                return True
            if n not in seen:
                seen.add(n)
                stack.extend(self.children[n])
        return False


def _active_endpoints(g: _Graph, sources: Iterable[str], observed: set[str], goal: str | None = None) -> set[str]:
    """Every node reachable from ``sources`` by an active simple trail.

    With ``goal`` set, stops as soon as that node is reached.
    """
    fk = g.determined_by(observed)
    collider_ok = {n: n in observed or g.has_descendant_in(n, observed) for n in g.nodes}
    found: set[str] = set()

    def extend(v: str, entered_head_first: bool, on_trail: set[str]) -> bool:
        # entered_head_first: the trail arc into v points at v
        steps = [(w, True) for w in g.children[v]] + [(w, False) for w in g.parents[v]]
        for w, forward in steps:
            if w in on_trail:
                continue
            # leaving along a parent arc means that arc also points at v
            collider = entered_head_first and not forward
            if collider:
                if not collider_ok[v]:
                    continue
            elif v in fk:
                continue
            if w not in fk:
                found.add(w)
                if w == goal:
                    return True
            on_trail.add(w)
            done = extend(w, forward, on_trail)
            on_trail.discard(w)
            if done:
                return True
        return False

    for j in sources:
        if j in fk:
            continue
        found.add(j)
        if j == goal:
            return found
        # the start is an endpoint, never a collider: treat it as entered tail-first
        if extend(j, False, {j}):
            return found
    return found


def _guard(net: Network, limit: int) -> None:
    if len(net) > limit:
        raise OracleSizeError(len(net), limit)


def active_path_exists(net: Network, targets: Iterable[str], l: str, observed: Iterable[str], *, limit: int = GUARD_LIMIT) -> bool:
    """Whether some active simple trail joins a node of ``targets`` to ``l``."""
    targets, observed = set(targets), set(observed)
    net.require(targets, observed, l)
    _guard(net, limit)
    return l in _active_endpoints(_Graph(net), targets, observed, goal=l)


def oracle_irrelevant(net: Network, targets: Iterable[str], observed: Iterable[str], *, limit: int = GUARD_LIMIT) -> frozenset[str]:
    """Nodes with no active trail from the targets (D-separated from them)."""
    targets, observed = set(targets), set(observed)
    net.require(targets, observed)
    _guard(net, limit)
    reachable = _active_endpoints(_Graph(net), targets, observed)
    return frozenset(n for n in net.nodes if n not in reachable)


def _visited_in(g: _Graph, targets: set[str], observed: set[str], j: str) -> bool:
    return j in _active_endpoints(g, targets, observed - {j}, goal=j)


def oracle_visited(net: Network, targets: Iterable[str], observed: Iterable[str], *, limit: int = GUARD_LIMIT) -> frozenset[str]:
    """Nodes that might be relevant if they alone were unobserved and probabilistic."""
    targets, observed = set(targets), set(observed)
    net.require(targets, observed)
    _guard(net, limit)
    return frozenset(j for j in net.nodes if _visited_in(_Graph(net, chance=j), targets, observed, j))


def oracle_requisite_probability(net: Network, targets: Iterable[str], observed: Iterable[str], *, limit: int = GUARD_LIMIT) -> frozenset[str]:
    """Nodes whose distribution might be needed.

    For each node ``j`` a fresh root parent is attached to ``j`` alone; ``j``
    is requisite iff that new parent would be visited.
    """
    targets, observed = set(targets), set(observed)
    net.require(targets, observed)
    _guard(net, limit)
    out = set()
    for j in net.nodes:
        p = _fresh_id(net, j)
        g = _Graph(net, extra_parent=(p, j))
        if _visited_in(g, targets, observed | {p}, p):
            out.add(j)
    return frozenset(out)


def _fresh_id(net: Network, j: str) -> str:
    p = f"__parent_of_{j}"
    while p in net:
        p += "_"
    return p


def oracle_decision_restart(diagram):
    """Decision requisites with a fresh fast-engine run per stage (no resuming)."""
    from .decision import restart_requisites

    return restart_requisites(diagram)
