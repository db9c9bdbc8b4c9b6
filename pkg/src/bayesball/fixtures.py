"""The small worked networks used throughout the tests and docs.

``COIN``: two coin flips decide a prize deterministically.
``FIG3``: five-node network (1->2, 3->2, 3->6, 5->6) queried for 6 given 2, 5.
``EXPT_A`` / ``EXPT_G``: experiment-design diagram; in the ``g`` variant the
State is also observed before the Act decision.
"""

from __future__ import annotations

from importlib import resources

from .decision import InfluenceDiagram
from .graph import Network, NodeKind

C, D, DEC, V = NodeKind.CHANCE, NodeKind.DETERMINISTIC, NodeKind.DECISION, NodeKind.VALUE


def coin() -> Network:
    return Network(
        [("Coin1", C), ("Coin2", C), ("WinPrize", D)],
        [("Coin1", "WinPrize"), ("Coin2", "WinPrize")],
    )


def fig3() -> Network:
    return Network(
        [(n, C) for n in ("1", "2", "3", "5", "6")],
        [("1", "2"), ("3", "2"), ("3", "6"), ("5", "6")],
    )


_EXPT_NODES = [
    ("State", C),
    ("History", C),
    ("Experiment", C),
    ("Design", DEC),
    ("Act", DEC),
    ("Cost", V),
    ("Benefit", V),
]

_EXPT_ARCS = [
    ("State", "History"),
    ("State", "Experiment"),
    ("Design", "Experiment"),
    ("Design", "Cost"),
    ("State", "Benefit"),
    ("Act", "Benefit"),
    ("History", "Design"),
    ("Design", "Act"),
    ("Experiment", "Act"),
]


def expt_a() -> InfluenceDiagram:
    return InfluenceDiagram(Network(_EXPT_NODES, _EXPT_ARCS), ("Design", "Act"), {"History"})


def expt_g() -> InfluenceDiagram:
    net = Network(_EXPT_NODES, _EXPT_ARCS + [("State", "Act")])
    return InfluenceDiagram(net, ("Design", "Act"), {"History"})


BUILDERS = {"COIN": coin, "FIG3": fig3, "EXPT-a": expt_a, "EXPT-g": expt_g}


def fixture_path(name: str):
    """Path-like handle to the bundled JSON document for ``name``."""
    return resources.files("bayesball") / "data" / f"{name}.json"


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()
