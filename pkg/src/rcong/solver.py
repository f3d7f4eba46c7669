"""Linear r-congruences ``a*x ≡_r b (mod m)``.

These are the classical congruences ``a*x ≡ b + r (mod m)``, solvable exactly
when ``gcd(a, m)`` divides ``b + r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classes import ResidueClass
from .core import Modulus, gcd_ext


@dataclass(frozen=True)
class SolutionSet:
    a: int
    b: int
    r: int
    m: int
    solutions: tuple[int, ...]

    @property
    def solvable(self) -> bool:
        return bool(self.solutions)


def is_solvable(a: int, b: int, r: int, m: int) -> bool:
    return (b + r) % math.gcd(a, Modulus(m)) == 0


def solve_linear(a: int, b: int, r: int, m: int) -> SolutionSet:
    """All ``x`` in ``[0, m)`` with ``a*x ≡_r b (mod m)``, ascending."""
    m = Modulus(m)
    target = b + r
    g = math.gcd(a, m)
    if target % g:
        return SolutionSet(a, b, r, m, ())
    step = m // g
    # a/g is a unit modulo m/g; for a == 0 we get g == m and step == 1.
    _, inv, _ = gcd_ext(a // g, step)
    x0 = (target // g) * inv % step
    return SolutionSet(a, b, r, m, tuple(x0 + t * step for t in range(g)))


def find_r(a: int, b: int, m: int) -> ResidueClass:
    """The class of every ``r`` with ``a ≡_r b (mod m)``."""
    return ResidueClass(m, a - b)
