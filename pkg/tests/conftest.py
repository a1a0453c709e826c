import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from permequiv.algebra import GF, QQ
from permequiv.linalg import Matrix

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

F7 = GF(7)

# worked McEliece instance over F_7 with alpha = 3, d = 4
G_RS = [[6, 1, 3, 1, 0, 0], [0, 6, 1, 3, 1, 0], [0, 0, 6, 1, 3, 1]]
G1_ROWS = [[1, 2, 3, 6, 6, 1], [4, 0, 4, 6, 1, 0], [0, 2, 5, 4, 6, 3]]
H_G1 = [[3, 4, 6, 1, 0, 0], [1, 1, 4, 0, 1, 0], [3, 6, 4, 0, 0, 1]]
S_INV = [[4, 6, 1], [2, 3, 2], [3, 3, 0]]
W_ROWS = [(3, 0, 1, 6, 0, 1), (1, 6, 0, 1, 0, 3), (0, 3, 6, 1, 1, 0),
          (6, 1, 1, 0, 3, 0), (0, 1, 0, 3, 6, 1), (1, 0, 3, 0, 1, 6)]
# P = I_6((16523)^-1)
P_ROWS = [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0],
          [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0]]

V = (6, 1, 3, 1, 0, 0)
W = (0, 3, 6, 1, 1, 0)

A26 = [[8, -1, 1, 2], [11, -2, 1, 3]]
B26 = [[1, 0, 1, 2], [-1, 1, 0, 3]]


@pytest.fixture
def G1():
    return Matrix(F7, G1_ROWS, 6)


@pytest.fixture
def G():
    return Matrix(F7, G_RS, 6)


@pytest.fixture
def A():
    return Matrix(QQ, A26, 4)


@pytest.fixture
def B():
    return Matrix(QQ, B26, 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
