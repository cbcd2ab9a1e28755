from functools import lru_cache

import pytest

from gradedposets import oracle
from gradedposets.poset import Poset, parse_poset

# acceptance criterion results, printed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


# left: not graded at all
NOT_GRADED = """
5
0 < 2   # a < c
2 < 3   # c < d
3 < 1   # d < b
0 < 4   # a < e
4 < 1   # e < b
"""

# a < b, a < c, b < d, c < e: both maximal chains have three elements
TREE = """
5
0 < 1
0 < 2
1 < 3
2 < 4
"""

# an isolated vertex next to a two-element chain
WEAK = """
3
1 < 2
"""

# a, z on rank 0; b, c on rank 1; d, e on rank 2.  z < c < e plus b is a (3+1).
RIGHT = """
6
0 < 2   # a < b
0 < 3   # a < c
2 < 4   # b < d
3 < 4   # c < d
3 < 5   # c < e
1 < 3   # z < c
"""

# graded semiorder of height 3 with a skeleton of all-seeing vertices
# rank 0: a=0 b=1; rank 1: i=2 c=3 d=4 e=5; rank 2: f=6 g=7 h=8
SLICES = """
9
0 < 3
1 < 3
0 < 4
1 < 4
0 < 5
0 < 2
1 < 2
3 < 6
3 < 7
3 < 8
4 < 6
5 < 6
5 < 7
5 < 8
2 < 6
2 < 7
2 < 8
"""
SLICES_ALL_SEEING = {0, 2, 3, 6}


@pytest.fixture(scope="session")
def example_posets() -> dict[str, Poset]:
    return {name: parse_poset(text) for name, text in
            [("not_graded", NOT_GRADED), ("tree", TREE), ("weak", WEAK), ("right", RIGHT), ("slices", SLICES)]}


@lru_cache(maxsize=None)
def shared_census() -> oracle.CensusTable:
    return oracle.census(6)


@pytest.fixture(scope="session")
def census6() -> oracle.CensusTable:
    return shared_census()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
