"""Combinators that derive new r-congruences from true ones.

Every combinator checks its input claims eagerly and refuses false premises.
Derived remainder indices are returned exactly as the rule produces them;
use :func:`rcong.core.canonical_r` to reduce them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from .core import CongruenceClaim, Modulus, lcm_many


class FalsePremise(ValueError):
    """An input claim does not hold."""


class ModulusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class DerivedClaim:
    claim: CongruenceClaim
    rule: str
    inputs: tuple[Any, ...]

    @property
    def holds(self) -> bool:
        return self.claim.holds


def _require(*claims: CongruenceClaim) -> None:
    for c in claims:
        if not c.holds:
            raise FalsePremise(f"premise is false: {c}")


def _same_modulus(c1: CongruenceClaim, c2: CongruenceClaim) -> int:
    if c1.m != c2.m:
        raise ModulusMismatch(f"moduli differ: {c1.m} vs {c2.m}")
    return c1.m


def add_claims(c1: CongruenceClaim, c2: CongruenceClaim, sign: int = 1) -> DerivedClaim:
    """``a ± c ≡_{r1 ± r2} b ± d (mod m)`` from ``a ≡_{r1} b`` and ``c ≡_{r2} d``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = _same_modulus(c1, c2)
    _require(c1, c2)
    claim = CongruenceClaim(c1.a + sign * c2.a, c1.b + sign * c2.b, c1.r + sign * c2.r, m)
    return DerivedClaim(claim, "add" if sign == 1 else "sub", (c1, c2))


def mul_claims(c1: CongruenceClaim, c2: CongruenceClaim) -> DerivedClaim:
    """``ac ≡_{r1 d + r2 b + r1 r2} bd (mod m)``."""
    m = _same_modulus(c1, c2)
    _require(c1, c2)
    index = c1.r * c2.b + c2.r * c1.b + c1.r * c2.r
    return DerivedClaim(CongruenceClaim(c1.a * c2.a, c1.b * c2.b, index, m), "mul", (c1, c2))


def scale_claim(c: CongruenceClaim, k: int) -> DerivedClaim:
    if k < 1:
        raise ValueError("scale factor must be a positive integer")
    _require(c)
    return DerivedClaim(CongruenceClaim(k * c.a, k * c.b, k * c.r, c.m), "scale", (c, k))


def restrict_modulus(c: CongruenceClaim, d: int) -> DerivedClaim:
    """Pass to a divisor ``d`` of the claim's modulus."""
    d = Modulus(d)
    if c.m % d:
        raise ValueError(f"{d} does not divide {c.m}")
    _require(c)
    return DerivedClaim(CongruenceClaim(c.a, c.b, c.r, d), "restrict", (c, d))


def power_index(r: int, b: int, k: int) -> int:
    return (r + b) ** k - b**k


def power_claim(c: CongruenceClaim, k: int) -> DerivedClaim:
    """``a^k ≡_{(r+b)^k - b^k} b^k (mod m)``."""
    if k < 1:
        raise ValueError("exponent must be a positive integer")
    _require(c)
    claim = CongruenceClaim(c.a**k, c.b**k, power_index(c.r, c.b, k), c.m)
    return DerivedClaim(claim, "power", (c, k))


def combine_lcm(claims: Sequence[CongruenceClaim]) -> DerivedClaim:
    """Merge claims on the same ``(a, b, r)`` into one claim modulo the lcm."""
    if not claims:
        raise ValueError("no claims to combine")
    head = claims[0]
    for c in claims[1:]:
        if (c.a, c.b, c.r) != (head.a, head.b, head.r):
            raise ValueError(f"claims disagree on (a, b, r): {head} vs {c}")
    _require(*claims)
    m = lcm_many(c.m for c in claims)
    return DerivedClaim(CongruenceClaim(head.a, head.b, head.r, m), "lcm", tuple(claims))


def cancel(c: CongruenceClaim, factor: int) -> DerivedClaim:
    """From ``ca ≡_r cb (mod m)`` with ``c | r`` derive ``a ≡_{r/c} b (mod m/gcd(c, m))``."""
    if factor == 0:
        raise ValueError("cannot cancel a zero factor")
    for name, value in (("left term", c.a), ("right term", c.b), ("r", c.r)):
        if value % factor:
            raise ValueError(f"{factor} does not divide the {name} {value}")
    _require(c)
    m = c.m // math.gcd(factor, c.m)
    claim = CongruenceClaim(c.a // factor, c.b // factor, c.r // factor, m)
    return DerivedClaim(claim, "cancel", (c, factor))
