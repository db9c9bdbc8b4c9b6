import random

import pytest

from bayesball import fixtures
from bayesball.generate import GenParams, random_case


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion, summarised at the end of the run")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    results = item.config._acceptance
    ok = results.get(number, (True, title))[0] and report.passed
    results[number] = (ok, title)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_acceptance", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, title = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def coin():
    return fixtures.coin()


@pytest.fixture
def fig3():
    return fixtures.fig3()


@pytest.fixture
def expt_a():
    return fixtures.expt_a()


@pytest.fixture
def expt_g():
    return fixtures.expt_g()


def make_random_cases(count=1000, seed=2024):
    """Small random networks and queries, mixed determinism and observation."""
    meta = random.Random(seed)
    cases = []
    for i in range(count):
        params = GenParams(
            node_count=meta.randint(1, 12),
            arc_probability=meta.uniform(0.1, 0.45),
            deterministic_fraction=meta.uniform(0.0, 0.5),
            observed_fraction=meta.uniform(0.0, 0.5),
            seed=i,
        )
        cases.append(random_case(params))
    return cases


@pytest.fixture(scope="session")
def random_cases():
    return make_random_cases()
