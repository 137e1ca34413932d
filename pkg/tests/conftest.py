"""Shared fixtures: benchmark instances and option builders."""
import random

import pytest

from beamkit.core import OrderingPolicy
from beamkit.domains import fixture_graph, fixture_text
from beamkit.domains.tiles import parse_korf_tiles, scrambled_state
from beamkit.engines import DedupMode, SearchOptions


def make_options(policy=OrderingPolicy.COST_GUIDED, pruning=False,
                 dedup=DedupMode.NONE, **kw) -> SearchOptions:
    return SearchOptions(policy=policy, incumbent_pruning=pruning,
                         dedup=dedup, **kw)


# Verdict lines recorded by the acceptance suite; echoed after the run so
# they appear in the terminal output regardless of output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def korf_states():
    return parse_korf_tiles(fixture_text("korf15.txt"))


@pytest.fixture(scope="session")
def fig2():
    return fixture_graph("fig2")


@pytest.fixture(scope="session")
def fig3():
    return fixture_graph("fig3")


def random_tile_states(count: int, seed: int, size: int = 3,
                       min_steps: int = 10, max_steps: int = 25):
    """Deterministic batch of easy scrambled states for oracle-scale tests."""
    rng = random.Random(seed)
    return [scrambled_state(size, rng.randrange(min_steps, max_steps + 1), rng)
            for _ in range(count)]
