import random

import pytest

from simplex_sidon.linalg import IntMatrix

ACCEPTANCE_LINES = []


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> IntMatrix:
    """Product of random elementary row operations (det = +-1)."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.random()
        if n > 1 and kind < 0.6:
            q = rng.randint(-3, 3)
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
        elif n > 1 and kind < 0.8:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return IntMatrix(m)


def random_nonsingular(rng: random.Random, n: int, lo=-20, hi=20) -> IntMatrix:
    while True:
        a = IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if a.det() != 0:
            return a


@pytest.fixture
def rng():
    return random.Random(20171)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
