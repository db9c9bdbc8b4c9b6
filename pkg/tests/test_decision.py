import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bayesball.decision import (
    DiagramError,
    InfluenceDiagram,
    RequisiteWarning,
    TemporalOrderError,
    decision_requisites,
    format_table,
    information_sets,
    relevant_values,
    restart_requisites,
)
from bayesball.generate import random_influence_diagram
from bayesball.graph import Network


def _sets(*names):
    return frozenset(names)


def test_information_sets_expt_a(expt_a):
    info = information_sets(expt_a)
    assert info.known == (_sets("History"), _sets("Design", "Experiment", "History"))
    assert info.newly_observed == (frozenset(), _sets("Experiment"))


def test_information_sets_expt_g(expt_g):
    assert information_sets(expt_g).known[1] == _sets("Design", "Experiment", "History", "State")


def test_information_sets_single_bare_decision():
    net = Network([("d", "decision"), ("v", "value")], [("d", "v")])
    assert information_sets(InfluenceDiagram(net, ["d"])).known == (frozenset(),)


def test_information_sets_are_nested(expt_a, expt_g):
    for diagram in (expt_a, expt_g):
        info = information_sets(diagram)
        previous = diagram.evidence
        for d, known in zip(diagram.decision_order, info.known):
            assert previous <= known | {d}
            previous = known | {d}


def test_late_evidence_is_a_temporal_error():
    net = Network([("d", "decision"), ("x", "chance"), ("v", "value")], [("d", "x"), ("x", "v")])
    with pytest.raises(TemporalOrderError):
        information_sets(InfluenceDiagram(net, ["d"], ["x"]))


def test_decision_informed_by_later_decision():
    net = Network([("d1", "decision"), ("d2", "decision"), ("v", "value")], [("d2", "d1"), ("d1", "v")])
    with pytest.raises(TemporalOrderError):
        information_sets(InfluenceDiagram(net, ["d1", "d2"]))


def test_diagram_invariants():
    net = Network([("d", "decision"), ("x", "chance"), ("v", "value")], [("x", "d"), ("d", "v")])
    with pytest.raises(DiagramError):
        InfluenceDiagram(net, [])
    with pytest.raises(DiagramError):
        InfluenceDiagram(net, ["d", "d"])
    with pytest.raises(DiagramError):
        InfluenceDiagram(net, ["d"], ["v"])
    with pytest.raises(DiagramError):
        InfluenceDiagram(net, ["d"], value_aggregation="max")
    assert InfluenceDiagram(net, ["d"], value_aggregation="product").nonnegative_attested


def test_relevant_values(expt_a):
    assert relevant_values(expt_a, 2) == {"Benefit"}
    assert relevant_values(expt_a, 1) == {"Cost"}
    with pytest.raises(IndexError):
        relevant_values(expt_a, 3)


def test_relevant_values_warns_when_last_decision_is_idle():
    net = Network([("d1", "decision"), ("d2", "decision"), ("v", "value")], [("d1", "v")])
    diagram = InfluenceDiagram(net, ["d1", "d2"])
    with pytest.warns(RequisiteWarning):
        assert relevant_values(diagram, 2) == set()


def test_value_shared_by_two_decisions_goes_to_the_later_one():
    net = Network(
        [("d1", "decision"), ("d2", "decision"), ("v", "value")],
        [("d1", "v"), ("d2", "v")],
    )
    diagram = InfluenceDiagram(net, ["d1", "d2"])
    assert relevant_values(diagram, 2) == {"v"}
    assert relevant_values(diagram, 1) == set()


EXPT_A_TABLE = [
    (2, "Act", _sets("Design", "History", "Experiment"), _sets("Benefit", "History", "Experiment", "State"), False),
    (1, "Design", _sets("History"), _sets("Benefit", "History", "Experiment", "State", "Cost"), False),
    (0, None, _sets("History"), _sets("Benefit", "History", "Experiment", "State", "Cost"), False),
]

EXPT_G_TABLE = [
    (2, "Act", _sets("State"), _sets("Benefit"), False),
    (1, "Design", _sets("History"), _sets("Benefit", "Cost", "History", "State"), False),
    (0, None, _sets("History"), _sets("Benefit", "Cost", "History", "State"), False),
]


def test_expt_a_table(expt_a):
    result = decision_requisites(expt_a)
    assert result.table() == EXPT_A_TABLE
    assert result.irrelevant_decisions == ()


def test_expt_g_table(expt_g):
    assert decision_requisites(expt_g).table() == EXPT_G_TABLE


def test_idle_last_decision_is_irrelevant():
    net = Network([("d1", "decision"), ("d2", "decision"), ("x", "chance"), ("v", "value")],
                  [("x", "d1"), ("d1", "v"), ("x", "v")])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RequisiteWarning)
        result = decision_requisites(InfluenceDiagram(net, ["d1", "d2"]))
    last = result.stage(2)
    assert last.irrelevant and last.requisite_observations == set() and last.requisite_probability == set()
    assert result.irrelevant_decisions == ("d2",)


def test_no_evidence_means_no_observations_now(expt_a):
    diagram = InfluenceDiagram(expt_a.net, expt_a.decision_order, ())
    assert decision_requisites(diagram).stage(0).requisite_observations == set()


def test_no_decisions():
    net = Network([("x", "chance"), ("v", "value")], [("x", "v")])
    result = decision_requisites(InfluenceDiagram(net, (), {"x"}))
    assert [s.index for s in result.stages] == [0]


def test_invalid_diagram_is_refused():
    net = Network([("d", "decision"), ("v", "value"), ("x", "chance")], [("d", "v"), ("v", "x")])
    with pytest.raises(DiagramError):
        decision_requisites(InfluenceDiagram(net, ["d"]))


def test_format_table(expt_g):
    text = format_table(decision_requisites(expt_g))
    lines = text.splitlines()
    assert lines[0].split() == ["i", "decision", "N_e^i", "N_p^i", "irrelevant"]
    assert lines[1].split()[:3] == ["2", "Act", "State"]
    assert len(lines) == 4


def test_traversals_never_use_informational_arcs(expt_g, monkeypatch):
    from bayesball import bayes_ball

    seen = []
    original = bayes_ball.drain

    def recording(net, state, *args, **kwargs):
        seen.append(net)
        return original(net, state, *args, **kwargs)

    monkeypatch.setattr(bayes_ball, "drain", recording)
    decision_requisites(expt_g)
    assert len(seen) == 3
    assert all(not net.informational_arcs for net in seen)
    assert seen[0].parent_list("Act") == ()


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_resumed_sweep_equals_restarts(seed):
    diagram = random_influence_diagram(seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RequisiteWarning)
        resumed = decision_requisites(diagram)
        restarted = restart_requisites(diagram)
    assert resumed.table() == restarted.table()
    assert resumed.marks.marks() == restarted.marks.marks()
    arcs = len(diagram.net.masked.arcs)
    counters = resumed.marks
    assert counters.arc_traversals <= 2 * arcs
    assert counters.visits_executed <= counters.targets_scheduled + counters.replays_scheduled + counters.arc_traversals


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_raw_marks_grow_stage_by_stage(seed):
    diagram = random_influence_diagram(seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RequisiteWarning)
        result = decision_requisites(diagram)
    tops = [s.requisite_probability for s in result.stages]
    assert all(a <= b for a, b in zip(tops, tops[1:]))
    if not diagram.evidence:
        assert result.stage(0).requisite_observations == set()
    info = information_sets(diagram)
    for s in result.stages:
        allowed = diagram.evidence if s.index == 0 else info.known[s.index - 1]
        assert s.requisite_observations <= allowed
