import random

import pytest
from hypothesis import strategies as st

from wvgpower import WeightedVotingGame, load_scenario


@st.composite
def games(draw, max_n=8, max_weight=30, majority=False, min_n=1):
    n = draw(st.integers(min_n, max_n))
    weights = draw(st.lists(st.integers(0, max_weight), min_size=n, max_size=n))
    if sum(weights) == 0:
        weights[0] = 1
    total = sum(weights)
    lo = total // 2 + 1 if majority else 1
    quota = draw(st.integers(lo, total))
    return WeightedVotingGame.from_weights(quota, weights)


def random_game(rng: random.Random, max_n=15, max_weight=200, majority=False, min_n=1):
    n = rng.randint(min_n, max_n)
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    if sum(weights) == 0:
        weights[0] = 1
    total = sum(weights)
    quota = rng.randint(total // 2 + 1 if majority else 1, total)
    return WeightedVotingGame.from_weights(quota, weights)


@pytest.fixture(scope="session")
def may():
    return load_scenario("may2012")


@pytest.fixture(scope="session")
def june():
    return load_scenario("june2012")


@pytest.fixture(scope="session")
def dec():
    return load_scenario("dec2014")


@pytest.fixture
def g211():
    return WeightedVotingGame.from_weights(3, [2, 1, 1])


@pytest.fixture
def g111():
    return WeightedVotingGame.from_weights(2, [1, 1, 1])


@pytest.fixture
def dictator():
    return WeightedVotingGame.from_weights(51, [60, 40])


ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__ == "test_acceptance":
        number = int(item.name.split("_")[1])
        summary = item.function.__doc__.strip().splitlines()[0]
        ACCEPTANCE[number] = (summary, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        summary, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {summary}")
