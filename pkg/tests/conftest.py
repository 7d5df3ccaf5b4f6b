"""Shared oracles: literal recurrence unrolling, independent of the library.

The dictionaries are built by nothing but x(i) = x(i-1) + x(i-2) + x(i-3)
going up and x(i) = x(i+3) - x(i+2) - x(i+1) going down from the initial
terms, so they are a fair check against every closed form and matrix route.
"""

import pytest


def unrolled(x0, x1, x2, lo, hi):
    vals = {0: x0, 1: x1, 2: x2}
    for i in range(3, hi + 1):
        vals[i] = vals[i - 1] + vals[i - 2] + vals[i - 3]
    for i in range(-1, lo - 1, -1):
        vals[i] = vals[i + 3] - vals[i + 2] - vals[i + 1]
    return vals


@pytest.fixture(scope="session")
def t_oracle():
    return unrolled(0, 1, 1, -300, 600)


@pytest.fixture(scope="session")
def k_oracle():
    return unrolled(3, 1, 3, -300, 10050)


@pytest.fixture(scope="session")
def h_oracle():
    return unrolled(3, 0, 2, -300, 10050)
