import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import fjrank  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def star():
    """1 -> {2, 3}, 2 -> 1, 3 -> 1."""
    return fjrank.build_adjacency([("1", "2"), ("1", "3"), ("2", "1"), ("3", "1")])


@pytest.fixture
def two_cycle():
    return fjrank.build_adjacency([("a", "b"), ("b", "a")])


def random_stochastic(rng, n, density=None):
    """Row-stochastic matrix; ``density`` sparsifies while keeping a link per row."""
    w = rng.random((n, n))
    if density is not None:
        mask = rng.random((n, n)) < density
        mask[np.arange(n), rng.integers(0, n, n)] = True
        w *= mask
    return w / w.sum(axis=1, keepdims=True)
