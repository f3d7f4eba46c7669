"""The ring of r-residue classes over a fixed base point, taken formally.

Elements are identified by their index ``r``; addition and multiplication act
on indices. Distinct indices ``r`` and ``r + m`` name the same underlying set,
which :func:`to_class` exposes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ResidueClass, make_class
from .core import Modulus


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ResidueRing:
    m: int
    a: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", Modulus(self.m))

    def element(self, r: int) -> "FormalRingElement":
        return FormalRingElement(self, r)

    @property
    def zero(self) -> "FormalRingElement":
        return FormalRingElement(self, 0)

    @property
    def one(self) -> "FormalRingElement":
        return FormalRingElement(self, 1)


@dataclass(frozen=True)
class FormalRingElement:
    ring: ResidueRing
    r: int

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def a(self) -> int:
        return self.ring.a

    def __add__(self, other: "FormalRingElement") -> "FormalRingElement":
        return ring_add(self, other)

    def __mul__(self, other: "FormalRingElement") -> "FormalRingElement":
        return ring_mul(self, other)

    def __neg__(self) -> "FormalRingElement":
        return FormalRingElement(self.ring, -self.r)

    def __sub__(self, other: "FormalRingElement") -> "FormalRingElement":
        return ring_add(self, -other)


def _check(x: FormalRingElement, y: FormalRingElement) -> None:
    if x.ring != y.ring:
        raise RingMismatch(f"elements belong to different rings: {x.ring} vs {y.ring}")


def ring_add(x: FormalRingElement, y: FormalRingElement) -> FormalRingElement:
    _check(x, y)
    return FormalRingElement(x.ring, x.r + y.r)


def ring_mul(x: FormalRingElement, y: FormalRingElement) -> FormalRingElement:
    _check(x, y)
    return FormalRingElement(x.ring, x.r * y.r)


def to_class(x: FormalRingElement) -> ResidueClass:
    return make_class(x.a, x.m, x.r)


def psi(x: FormalRingElement) -> int:
    return x.r


def collision_witness(m: int, a: int = 0, r: int = 0) -> tuple[FormalRingElement, FormalRingElement]:
    """Two formally distinct elements, indices ``r`` and ``r + m``, over one class."""
    ring = ResidueRing(m, a)
    return ring.element(r), ring.element(r + ring.m)
