import itertools
import math

import pytest

from rcong.classes import ResidueClass
from rcong.core import is_r_congruent
from rcong.solver import find_r, is_solvable, solve_linear


def brute(a, b, r, m):
    return tuple(x for x in range(m) if (a * x - b - r) % m == 0)


@pytest.mark.parametrize(
    "a, b, r, m, expected",
    [(2, 3, 1, 4, (0, 2)), (2, 1, 0, 4, ()), (1, 5, 2, 7, (0,)), (1, -4, 9, 6, (5,)), (0, 3, 1, 4, (0, 1, 2, 3)),
     (0, 3, 0, 4, ())],
)
def test_solve_examples(a, b, r, m, expected):
    sol = solve_linear(a, b, r, m)
    assert sol.solutions == expected
    assert sol.solvable == bool(expected)


def test_solver_matches_exhaustive_search():
    for a, b, r in itertools.product(range(-10, 11), repeat=3):
        for m in range(1, 13):
            sol = solve_linear(a, b, r, m)
            assert sol.solutions == brute(a, b, r, m)
            assert sol.solvable == is_solvable(a, b, r, m) == ((b + r) % math.gcd(a, m) == 0)
            if sol.solvable:
                assert len(sol.solutions) == math.gcd(a, m)


def test_solver_large_modulus():
    m = 10**40 + 12
    sol = solve_linear(6, 10**30, 2, m)
    assert len(sol.solutions) == 2
    assert all(is_r_congruent(6 * x, 10**30, 2, m) for x in sol.solutions)


@pytest.mark.parametrize("a, b, m, rho", [(7, 8, 4, 3), (9, 9, 6, 0), (10, 1, 5, 4)])
def test_find_r_examples(a, b, m, rho):
    assert find_r(a, b, m) == ResidueClass(m, rho)


def test_find_r_coherence():
    for a, b in itertools.product(range(-8, 9), repeat=2):
        for m in range(1, 9):
            cls = find_r(a, b, m)
            for r in range(-3 * m, 3 * m + 1):
                assert (r in cls) == is_r_congruent(a, b, r, m)
