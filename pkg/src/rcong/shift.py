"""Shift permutations of the classical residue classes modulo m.

Shifting every class by ``r`` permutes the ``m`` labels ``0..m-1`` as
``i -> (i + r) mod m``. Only the shift amount is stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Modulus


@dataclass(frozen=True)
class ShiftPermutation:
    m: int
    shift: int

    def __post_init__(self) -> None:
        m = Modulus(self.m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "shift", self.shift % m)

    def __call__(self, label: int) -> int:
        return (label + self.shift) % self.m

    def __mul__(self, other: "ShiftPermutation") -> "ShiftPermutation":
        return compose(self, other)

    @property
    def is_identity(self) -> bool:
        return self.shift == 0

    def mapping(self) -> list[int]:
        """Images of labels ``0..m-1`` in order."""
        return [self(i) for i in range(self.m)]

    def power(self, k: int) -> "ShiftPermutation":
        return ShiftPermutation(self.m, self.shift * k)


def shift_permutation(m: int, r: int) -> ShiftPermutation:
    return ShiftPermutation(m, r)


def identity(m: int) -> ShiftPermutation:
    return ShiftPermutation(m, 0)


def compose(f: ShiftPermutation, g: ShiftPermutation) -> ShiftPermutation:
    if f.m != g.m:
        raise ValueError(f"cannot compose permutations of {f.m} and {g.m} labels")
    return ShiftPermutation(f.m, f.shift + g.shift)


def order(f: ShiftPermutation) -> int:
    """Order of ``f`` in the symmetric group, ``m / gcd(shift, m)``."""
    return f.m // math.gcd(f.shift, f.m)


def cycle_decomposition(f: ShiftPermutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest label, sorted by that label."""
    seen = [False] * f.m
    cycles = []
    for start in range(f.m):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = f(i)
        cycles.append(tuple(cycle))
    return cycles


def generated_subgroup(f: ShiftPermutation) -> list[ShiftPermutation]:
    """The distinct powers ``f^0, f^1, ...`` of ``f`` in order."""
    elements = [identity(f.m)]
    current = f
    while not current.is_identity:
        elements.append(current)
        current = compose(current, f)
    return elements
