"""Work counters on chains and sparse random DAGs.

The traversal only touches the part of the graph the ball can reach, so
on a chain blocked halfway the work tracks the prefix, and on unblocked
queries it grows linearly with the arc count.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from . import bayes_ball
from .bayes_ball import Query
from .generate import random_sparse_network
from .graph import Network, NodeKind


def chain_network(n: int) -> Network:
    ids = [str(i) for i in range(1, n + 1)]
    return Network([(i, NodeKind.CHANCE) for i in ids], list(zip(ids, ids[1:])))


def incident_arcs(net: Network, nodes) -> int:
    nodes = set(nodes)
    return sum(1 for a, b in set(net.arcs) if a in nodes or b in nodes)


@dataclass(frozen=True)
class ChainRun:
    n: int
    arcs: int
    observed_at: int | None
    visits_executed: int
    arc_traversals: int
    visited: int
    visited_arcs: int

    def as_dict(self) -> dict:
        return asdict(self)


def chain_run(n: int, observed_at: int | None = None, net: Network | None = None) -> ChainRun:
    """Query node 1 of an ``n``-chain, optionally observing ``observed_at``."""
    net = net or chain_network(n)
    observed = {str(observed_at)} if observed_at is not None else set()
    marks = bayes_ball.run(net, Query({"1"}, observed))
    return ChainRun(
        n=n,
        arcs=len(net.arcs),
        observed_at=observed_at,
        visits_executed=marks.visits_executed,
        arc_traversals=marks.arc_traversals,
        visited=len(marks.visited),
        visited_arcs=incident_arcs(net, marks.visited),
    )


def chain_pair(n: int) -> tuple[ChainRun, ChainRun]:
    """Same chain with the midpoint observed and with nothing observed."""
    net = chain_network(n)
    return chain_run(n, math.ceil(n / 2), net), chain_run(n, None, net)


@dataclass(frozen=True)
class FullRun:
    nodes: int
    arcs: int
    visits_executed: int


def full_graph_run(net: Network) -> FullRun:
    """Every node a target, nothing observed: the whole graph is active."""
    marks = bayes_ball.run(net, Query(net.nodes))
    return FullRun(len(net), len(net.arcs), marks.visits_executed)


def sparse_full_runs(sizes, mean_parents: float = 1.5, seed: int = 0) -> list[FullRun]:
    return [full_graph_run(random_sparse_network(n, mean_parents, seed + n)) for n in sizes]


def linear_fit(arcs, visits) -> tuple[float, list[float]]:
    """Least-squares slope through the origin and the per-point ratios."""
    slope = sum(a * v for a, v in zip(arcs, visits)) / sum(a * a for a in arcs)
    return slope, [v / a for a, v in zip(arcs, visits)]
