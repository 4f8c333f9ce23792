"""Session-wide cache of exponent solves shared across test modules."""

import pytest

from gcube.solver import SolverConfig, solve_exponent

SOLVED = {}


def solve_cached(n, k):
    key = (n, k)
    if key not in SOLVED:
        SOLVED[key] = solve_exponent(n, k, SolverConfig())
    return SOLVED[key]


@pytest.fixture(scope="session")
def solved():
    return solve_cached
