"""r-residue classes.

The class of ``a`` under r-congruence modulo ``m`` is the classical class of
``a`` shifted by ``r``, so it is stored by its reduced label
``rho = (a + r) mod m``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Modulus


@dataclass(frozen=True)
class ResidueClass:
    """The set ``{rho + m*n : n in Z}`` with ``0 <= rho < m``."""

    m: int
    rho: int

    def __post_init__(self) -> None:
        m = Modulus(self.m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rho", self.rho % m)

    def __contains__(self, x: int) -> bool:
        return (x - self.rho) % self.m == 0

    def members(self, lo: int, hi: int) -> list[int]:
        return members_in_range(self, lo, hi)

    def __str__(self) -> str:
        return f"{self.rho} + {self.m}Z"


@dataclass(frozen=True)
class ClassTable:
    m: int
    r: int
    rows: tuple[tuple[int, ResidueClass], ...]

    @property
    def rhos(self) -> list[int]:
        return [c.rho for _, c in self.rows]


def make_class(a: int, m: int, r: int = 0) -> ResidueClass:
    return ResidueClass(m, a + r)


def class_eq(x: ResidueClass, y: ResidueClass) -> bool:
    """Set equality. Classes with different moduli compare unequal."""
    return x.m == y.m and x.rho == y.rho


def contains(c: ResidueClass, x: int) -> bool:
    return x in c


def members_in_range(c: ResidueClass, lo: int, hi: int) -> list[int]:
    """Ascending members of ``c`` inside the closed interval ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    start = lo + (c.rho - lo) % c.m
    return list(range(start, hi + 1, c.m))


def class_table(m: int, r: int) -> ClassTable:
    m = Modulus(m)
    return ClassTable(m, r, tuple((a, make_class(a, m, r)) for a in range(m)))
