import random

from hypothesis import given, settings
from hypothesis import strategies as st

from bayesball import bayes_ball
from bayesball.bayes_ball import Query
from bayesball.graph import functionally_determined

from strategies import network_queries, networks, node_subsets

SETTINGS = settings(max_examples=300, deadline=None)


def _single(net, j, observed):
    return bayes_ball.run(net, Query({j}, observed))


@SETTINGS
@given(network_queries())
def test_target_sets_decompose(case):
    net, q = case
    marks = bayes_ball.run(net, q)
    singles = [_single(net, j, q.observed) for j in q.targets]
    assert marks.bottom == set().union(*(m.bottom for m in singles))
    assert marks.top == set().union(*(m.top for m in singles))
    assert marks.visited == set().union(*(m.visited for m in singles))
    assert bayes_ball.irrelevant(net, q.targets, q.observed) == frozenset.intersection(
        *(bayes_ball.irrelevant(net, {j}, q.observed) for j in q.targets)
    )


@SETTINGS
@given(st.data())
def test_determined_targets_reach_nothing(data):
    net = data.draw(networks())
    observed = data.draw(node_subsets(net))
    determined = functionally_determined(net, observed)
    targets = data.draw(st.sets(st.sampled_from(sorted(determined)), min_size=1)) if determined else set()
    marks = bayes_ball.run(net, Query(targets, observed))
    assert not marks.bottom
    assert bayes_ball.irrelevant(net, targets, observed) == frozenset(net.nodes)


@SETTINGS
@given(network_queries())
def test_singleton_irrelevance_is_symmetric(case):
    net, q = case
    free = [n for n in net.nodes if n not in q.observed]
    for j in free:
        for l in free:
            assert bayes_ball.is_irrelevant(net, {j}, {l}, q.observed) == bayes_ball.is_irrelevant(net, {l}, {j}, q.observed)


@SETTINGS
@given(network_queries(), st.integers(0, 2**32))
def test_schedule_does_not_change_marks(case, seed):
    net, q = case
    reference = bayes_ball.run(net, q).marks()
    assert bayes_ball.run(net, q, "lifo").marks() == reference
    assert bayes_ball.run(net, q, random.Random(seed)).marks() == reference


@SETTINGS
@given(network_queries())
def test_observed_and_determined_never_bottom(case):
    net, q = case
    marks = bayes_ball.run(net, q)
    assert not marks.bottom & q.observed
    assert not marks.bottom & functionally_determined(net, q.observed)
    assert marks.top <= marks.visited and marks.bottom <= marks.visited


@SETTINGS
@given(network_queries())
def test_work_is_bounded_by_arcs(case):
    net, q = case
    marks = bayes_ball.run(net, q)
    # each arc is crossed at most once upwards and once downwards
    assert marks.arc_traversals <= 2 * len(net.arcs)
    active = sum(1 for a, b in net.arcs if a in marks.visited and b in marks.visited)
    assert marks.arc_traversals <= 2 * active
    assert marks.visits_executed <= len(q.targets) + marks.arc_traversals
