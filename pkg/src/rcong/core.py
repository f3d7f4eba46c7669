"""Division with remainder, gcd helpers and the r-congruence predicate.

An integer ``a`` is r-congruent to ``b`` modulo ``m`` when ``a - b = m*q + r``
for some integer ``q``; equivalently ``m`` divides ``a - b - r``, or
``a ≡ b + r (mod m)`` in the classical sense.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable


class Modulus(int):
    """A positive modulus built from any nonzero integer.

    Congruence modulo ``m`` and modulo ``-m`` coincide, so the sign is dropped.
    """

    def __new__(cls, m: int) -> "Modulus":
        m = int(m)
        if m == 0:
            raise ValueError("modulus must be nonzero")
        return super().__new__(cls, abs(m))

    def __repr__(self) -> str:
        return f"Modulus({int(self)})"

    __str__ = int.__repr__


class Convention(enum.Enum):
    """Which representative the division algorithm returns as remainder."""

    LEAST_NONNEGATIVE = "least-nonnegative"  # 0 <= r < m
    BALANCED = "balanced"  # -m/2 < r <= m/2


class Kind(enum.Enum):
    TRIVIAL = "trivial"
    NON_TRIVIAL = "non-trivial"


def div_rem(b: int, a: int, conv: Convention = Convention.LEAST_NONNEGATIVE) -> tuple[int, int]:
    """Return ``(q, r)`` with ``b == a*q + r`` and ``r`` in the range of ``conv``."""
    a = Modulus(a)
    q, r = divmod(b, a)
    if conv is Convention.BALANCED and 2 * r > a:
        q, r = q + 1, r - a
    return q, r


def in_range(r: int, m: int, conv: Convention) -> bool:
    """True if ``r`` is a legal remainder modulo ``m`` under ``conv``."""
    if conv is Convention.BALANCED:
        return -m < 2 * r <= m
    return 0 <= r < m


def is_r_congruent(a: int, b: int, r: int, m: int) -> bool:
    return (a - b - r) % Modulus(m) == 0


def canonical_r(a: int, b: int, m: int, conv: Convention = Convention.LEAST_NONNEGATIVE) -> int:
    """The unique remainder in ``conv``'s range making ``a ≡_r b (mod m)`` true."""
    return div_rem(a - b, m, conv)[1]


def classify(r: int, m: int) -> Kind:
    """Trivial exactly when ``r`` is a multiple of ``m``."""
    return Kind.TRIVIAL if r % Modulus(m) == 0 else Kind.NON_TRIVIAL


@dataclass(frozen=True)
class CongruenceClaim:
    """The statement ``a ≡_r b (mod m)``; it may or may not be true.

    ``r`` is stored as given and is not reduced into a remainder range.
    """

    a: int
    b: int
    r: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", Modulus(self.m))

    @property
    def holds(self) -> bool:
        return is_r_congruent(self.a, self.b, self.r, self.m)

    @property
    def quotient(self) -> int | None:
        """The witness ``q`` in ``a - b = m*q + r``, or None if the claim is false."""
        q, rem = divmod(self.a - self.b - self.r, self.m)
        return q if rem == 0 else None

    @property
    def kind(self) -> Kind:
        return classify(self.r, self.m)

    def __str__(self) -> str:
        return f"{self.a} ≡_{self.r} {self.b} (mod {self.m})"


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y == g``."""
    if a == 0 and b == 0:
        raise ValueError("gcd_ext(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def lcm_many(ms: Iterable[int]) -> Modulus:
    ms = [Modulus(m) for m in ms]
    if not ms:
        raise ValueError("lcm of an empty list")
    return Modulus(reduce(math.lcm, ms))
