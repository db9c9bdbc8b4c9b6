import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bayesball import fixtures
from bayesball.decision import InfluenceDiagram
from bayesball.document import DocumentError, NetworkValidationError, parse_network, serialize, to_document
from bayesball.generate import random_influence_diagram
from bayesball.graph import Network

from strategies import networks


@pytest.mark.parametrize("name", sorted(fixtures.BUILDERS))
def test_bundled_documents_match_builders(name):
    text = fixtures.fixture_text(name)
    model = parse_network(text)
    assert model == fixtures.BUILDERS[name]()
    assert serialize(model) == text


def test_fig3_document():
    net = parse_network(fixtures.fixture_text("FIG3"))
    assert isinstance(net, Network) and len(net) == 5


def test_expt_document():
    diagram = parse_network(fixtures.fixture_text("EXPT-a"))
    assert isinstance(diagram, InfluenceDiagram)
    assert len(diagram.net) == 7
    assert diagram.decision_order == ("Design", "Act")
    assert diagram.evidence == {"History"}


def _doc(**changes):
    doc = json.loads(fixtures.fixture_text("COIN"))
    doc.update(changes)
    return json.dumps(doc)


def test_unknown_kind_is_a_schema_error():
    with pytest.raises(DocumentError, match="schema"):
        parse_network(_doc(nodes=[{"id": "a", "kind": "oracle"}]))


def test_unknown_field_is_rejected():
    with pytest.raises(DocumentError):
        parse_network(_doc(colour="blue"))


def test_wrong_version_is_rejected():
    with pytest.raises(DocumentError):
        parse_network(_doc(format_version=2))


def test_evidence_requires_a_diagram():
    with pytest.raises(DocumentError):
        parse_network(_doc(evidence=["Coin1"]))


def test_syntax_error_carries_position():
    with pytest.raises(DocumentError) as info:
        parse_network('{\n  "format_version": 1,\n  "nodes": [,]\n}')
    assert info.value.line == 3 and info.value.column is not None


def test_validation_errors_surface():
    with pytest.raises(NetworkValidationError) as info:
        parse_network(_doc(arcs=[["Coin1", "WinPrize"], ["WinPrize", "Coin1"]]))
    assert "cycle" in info.value.report.codes()
    with pytest.raises(NetworkValidationError):
        parse_network(_doc(arcs=[["Coin1", "Nowhere"]]))


def test_duplicate_node_is_a_document_error():
    with pytest.raises(DocumentError):
        parse_network(_doc(nodes=[{"id": "a", "kind": "chance"}, {"id": "a", "kind": "chance"}], arcs=[]))


def test_product_aggregation_round_trips():
    doc = json.loads(fixtures.fixture_text("EXPT-a"))
    doc["value_aggregation"] = "product"
    diagram = parse_network(json.dumps(doc))
    assert diagram.nonnegative_attested
    assert to_document(diagram) == doc


@settings(max_examples=100, deadline=None)
@given(networks())
def test_network_round_trip(net):
    assert parse_network(serialize(net)) == net


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_diagram_round_trip(seed):
    diagram = random_influence_diagram(seed)
    text = serialize(diagram)
    assert parse_network(text) == diagram
    assert serialize(parse_network(text)) == text
