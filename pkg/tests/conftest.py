from fractions import Fraction as F
from pathlib import Path

import pytest

from cactusres import Digraph, parse_edge_list
from cactusres.generators import GenSpec, random_balanced_digraph, random_directed_cactus

DATA = Path(__file__).parent / "data"

FIG1_L = [
    [2, -1, -1, 0, 0],
    [0, 3, -1, -1, -1],
    [0, -1, 2, -1, 0],
    [-1, -1, 0, 2, 0],
    [-1, 0, 0, 0, 1],
]
FIG1_PINV = [
    [F(9, 35), 0, F(1, 35), F(-3, 35), F(-1, 5)],
    [F(-4, 35), F(1, 5), F(-2, 35), F(-1, 35), 0],
    [F(-6, 35), 0, F(11, 35), F(2, 35), F(-1, 5)],
    [F(-1, 35), 0, F(-4, 35), F(12, 35), F(-1, 5)],
    [F(2, 35), F(-1, 5), F(-6, 35), F(-2, 7), F(3, 5)],
]
FIG1_R = [
    [0, F(16, 35), F(18, 35), F(27, 35), F(44, 35)],
    [F(24, 35), 0, F(22, 35), F(3, 5), F(4, 5)],
    [F(32, 35), F(18, 35), 0, F(19, 35), F(46, 35)],
    [F(23, 35), F(19, 35), F(31, 35), 0, F(47, 35)],
    [F(26, 35), F(6, 5), F(44, 35), F(53, 35), 0],
]
FIG1_D = [
    [0, 1, 1, 2, 2],
    [2, 0, 1, 1, 1],
    [2, 1, 0, 1, 2],
    [1, 1, 2, 0, 2],
    [1, 2, 2, 3, 0],
]
FIG2_R = [
    [0, F(6, 7), F(8, 7), F(5, 7), 1, F(9, 7), 1],
    [F(8, 7), 0, F(2, 7), F(13, 7), F(15, 7), F(17, 7), F(15, 7)],
    [F(6, 7), F(12, 7), 0, F(11, 7), F(13, 7), F(15, 7), F(13, 7)],
    [F(9, 7), F(15, 7), F(17, 7), 0, F(2, 7), F(4, 7), F(16, 7)],
    [1, F(13, 7), F(15, 7), F(12, 7), 0, F(2, 7), 2],
    [F(5, 7), F(11, 7), F(13, 7), F(10, 7), F(12, 7), 0, F(12, 7)],
    [1, F(13, 7), F(15, 7), F(12, 7), 2, F(16, 7), 0],
]
FIG2_D = [
    [0, 1, 2, 1, 2, 3, 1],
    [2, 0, 1, 3, 4, 5, 3],
    [1, 2, 0, 2, 3, 4, 2],
    [3, 4, 5, 0, 1, 2, 4],
    [2, 3, 4, 3, 0, 1, 3],
    [1, 2, 3, 2, 3, 0, 2],
    [1, 2, 3, 2, 3, 4, 0],
]


def load(name: str) -> Digraph:
    return parse_edge_list((DATA / name).read_text())


@pytest.fixture
def fig1() -> Digraph:
    return load("fig1.edges")


@pytest.fixture
def fig2() -> Digraph:
    return load("fig2.edges")


@pytest.fixture
def digon() -> Digraph:
    return Digraph(2, frozenset({(1, 2), (2, 1)}))


def small_cactus(seed: int, n_max: int = 8) -> Digraph:
    return random_directed_cactus(
        GenSpec(seed=seed, n_target=n_max, cycle_count=1 + seed % 5, max_cycle_len=2 + seed % 4)
    )


def small_balanced(seed: int, n_max: int = 7) -> Digraph:
    n = 2 + seed % (n_max - 1)
    return random_balanced_digraph(GenSpec(seed=seed, n_target=n, overlays=seed % 3))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
