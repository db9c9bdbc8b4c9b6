"""Seeded random networks, queries and influence diagrams."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bayes_ball import Query
from .decision import InfluenceDiagram
from .graph import Network, NodeKind, descendants


@dataclass(frozen=True)
class GenParams:
    node_count: int
    arc_probability: float = 0.25
    deterministic_fraction: float = 0.0
    observed_fraction: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be nonnegative")
        for name in ("arc_probability", "deterministic_fraction", "observed_fraction"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


def _random_dag(rng: random.Random, n: int, p: float) -> tuple[list[str], list[tuple[str, str]]]:
    ids = [str(i + 1) for i in range(n)]
    order = ids[:]
    rng.shuffle(order)
    arcs = [(order[a], order[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return ids, arcs


def random_network(params: GenParams) -> Network:
    """Acyclic by construction: arcs only run forward along a hidden random order."""
    rng = random.Random(params.seed)
    ids, arcs = _random_dag(rng, params.node_count, params.arc_probability)
    det = set(rng.sample(ids, round(params.deterministic_fraction * len(ids))))
    kinds = [(i, NodeKind.DETERMINISTIC if i in det else NodeKind.CHANCE) for i in ids]
    return Network(kinds, arcs)


def random_query(net: Network, rng: random.Random, observed_fraction: float = 0.0, max_targets: int = 3) -> Query:
    nodes = list(net.nodes)
    if not nodes:
        return Query()
    targets = rng.sample(nodes, rng.randint(1, min(max_targets, len(nodes))))
    observed = rng.sample(nodes, round(observed_fraction * len(nodes)))
    return Query(targets, observed)


def random_case(params: GenParams) -> tuple[Network, Query]:
    """A network and a query drawn from the same seed."""
    net = random_network(params)
    rng = random.Random(params.seed ^ 0x5EED)
    return net, random_query(net, rng, params.observed_fraction)


def random_influence_diagram(seed: int, max_nodes: int = 10, max_decisions: int = 3, arc_probability: float | None = None) -> InfluenceDiagram:
    """A temporally consistent influence diagram with separable values.

    Decisions are ordered along the hidden topological order, so every arc
    into a decision comes from something knowable before it.
    """
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    p = arc_probability if arc_probability is not None else rng.uniform(0.15, 0.45)
    ids = [str(i + 1) for i in range(n)]
    order = ids[:]
    rng.shuffle(order)

    # at least one value node, placed late so it can have parents
    value_count = rng.randint(1, max(1, min(3, n - 1)))
    values = set(rng.sample(order[1:], value_count))
    rest = [x for x in order if x not in values]
    decisions = set(rng.sample(rest, rng.randint(0, min(max_decisions, len(rest)))))
    chance = [x for x in rest if x not in decisions]
    det = set(rng.sample(chance, round(rng.uniform(0, 0.4) * len(chance))))

    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            src, dst = order[a], order[b]
            if src not in values and rng.random() < p:
                arcs.append((src, dst))
    for v in values:
        if not any(dst == v for _, dst in arcs):
            candidates = [x for x in order[:order.index(v)] if x not in values]
            arcs.append((rng.choice(candidates), v))

    def kind(x):
        if x in values:
            return NodeKind.VALUE
        if x in decisions:
            return NodeKind.DECISION
        return NodeKind.DETERMINISTIC if x in det else NodeKind.CHANCE

    net = Network([(x, kind(x)) for x in ids], arcs)
    decision_order = [x for x in order if x in decisions]
    downstream = set()
    for d in decision_order:
        downstream |= descendants(net, d) | {d}
    eligible = [x for x in chance if x not in downstream]
    evidence = rng.sample(eligible, rng.randint(0, len(eligible)) if eligible else 0)
    return InfluenceDiagram(net, decision_order, evidence, rng.choice(["sum", "product"]))


def random_sparse_network(node_count: int, mean_parents: float = 1.5, seed: int = 0) -> Network:
    """Large sparse DAG in linear time: each node draws parents from earlier nodes."""
    rng = random.Random(seed)
    ids = [str(i + 1) for i in range(node_count)]
    arcs = []
    for b in range(1, node_count):
        k = min(b, int(mean_parents) + (rng.random() < mean_parents % 1))
        for a in set(rng.randrange(b) for _ in range(k)):
            arcs.append((ids[a], ids[b]))
    return Network([(i, NodeKind.CHANCE) for i in ids], arcs)
