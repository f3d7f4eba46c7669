"""Exhaustive checker for the r-congruence statements over bounded grids.

Each statement is identified by a lemma id (``L2.3`` ... ``T2.14-psi``) and is
encoded as one or more *parts*. A part has named parameters, a grid that
enumerates parameter tuples in lexicographic order of those names, and a
scalar predicate that returns False exactly at a counterexample. Parts that
quantify over pairs of true claims also carry a vectorised evaluator; it
visits the same points in the same order as the scalar grid.

Where a statement admits more than one reading, the headline report encodes
one reading and the others ride along as ``alternatives``.

Parameter domains, with ``M, V, K, N`` the bounds below:

* ``m`` ranges over ``1..M``; ``a, b, c, d, r, r1, r2, r3`` over ``[-V, V]``.
* Premise-restricted parts only visit points where the input claims hold.
* ``k`` (exponent) ranges over ``1..K``; the scale factor over ``1..V``.
* moduli lists for the lcm statement are nondecreasing, length ``1..N``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from .classes import class_eq, class_table, make_class
from .ring import ResidueRing, psi, to_class
from .shift import generated_subgroup, order, shift_permutation
from .solver import solve_linear


class UnknownLemma(KeyError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_m: int = 8
    max_value: int = 8
    max_k: int = 4
    max_moduli: int = 3

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"bound {name} must be a positive integer, got {value!r}")

    _KEYS = {"m": "max_m", "v": "max_value", "k": "max_k", "n": "max_moduli"}

    @classmethod
    def parse(cls, text: str) -> "Bounds":
        """Parse ``"m=8,v=8,k=4,n=3"``; omitted keys keep their defaults."""
        kwargs = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, sep, value = item.partition("=")
            key = cls._KEYS.get(key.strip(), key.strip())
            if not sep or key not in cls.__dataclass_fields__:
                raise ValueError(f"bad bounds entry {item!r}; expected e.g. m=8,v=8,k=4,n=3")
            try:
                kwargs[key] = int(value)
            except ValueError:
                raise ValueError(f"bound {key} is not an integer: {value!r}") from None
        if not kwargs and text.strip():
            raise ValueError(f"empty bounds {text!r}")
        return cls(**kwargs)


class Verdict(enum.Enum):
    CONFIRMED = "confirmed"
    FALSIFIED = "falsified"


@dataclass(frozen=True)
class VerificationReport:
    lemma: str
    reading: str
    statement: str
    grid: dict[str, Any]
    cases_checked: int
    verdict: Verdict
    counterexample_count: int
    counterexamples: tuple[dict[str, Any], ...]
    alternatives: tuple["VerificationReport", ...] = ()

    @property
    def confirmed(self) -> bool:
        return self.verdict is Verdict.CONFIRMED

    def to_dict(self) -> dict[str, Any]:
        return {
            "lemma": self.lemma,
            "reading": self.reading,
            "statement": self.statement,
            "grid": self.grid,
            "cases_checked": self.cases_checked,
            "verdict": self.verdict.value,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [dict(c) for c in self.counterexamples],
            "alternatives": [alt.to_dict() for alt in self.alternatives],
        }


# A batch evaluator yields (cases, failure count, first failing tuples).
Batch = Callable[[Bounds, "int | None"], Iterator[tuple[int, int, list[tuple]]]]


@dataclass(frozen=True)
class Part:
    name: str
    params: tuple[str, ...]
    domain: str
    grid: Callable[[Bounds], Iterable[tuple]]
    predicate: Callable[..., bool]
    detail: Callable[..., dict[str, Any]] | None = None
    batch: Batch | None = None


@dataclass(frozen=True)
class Reading:
    lemma: str
    name: str
    statement: str
    parts: tuple[Part, ...]


@dataclass(frozen=True)
class Lemma:
    id: str
    headline: Reading
    alternatives: tuple[Reading, ...] = field(default=())


# -- arithmetic from first principles ---------------------------------------


def _divides(d: int, n: int) -> bool:
    """``d | n``, with ``0 | n`` only for ``n == 0``."""
    return n == 0 if d == 0 else n % d == 0


def _cong(a: int, b: int, r: int, m: int) -> bool:
    return (a - b - r) % m == 0


def _values(bounds: Bounds) -> range:
    return range(-bounds.max_value, bounds.max_value + 1)


def _moduli(bounds: Bounds) -> range:
    return range(1, bounds.max_m + 1)


def _window(a: int, r: int, m: int) -> frozenset[int]:
    """The r-class of ``a`` seen through ``[-m, m)``, a window of length >= m."""
    return frozenset(x for x in range(-m, m) if _cong(x, a, r, m))


def _true_claims(m: int, bounds: Bounds) -> Iterator[tuple[int, int, int]]:
    vals = _values(bounds)
    for a, b, r in itertools.product(vals, vals, vals):
        if _cong(a, b, r, m):
            yield a, b, r


def _brute_order(m: int, r: int) -> int:
    """Order of ``i -> i + r`` on ``0..m-1`` by repeated composition."""
    step = [(i + r) % m for i in range(m)]
    current = list(step)
    k = 1
    while current != list(range(m)):
        current = [step[i] for i in current]
        k += 1
    return k


def _brute_lcm(ms: tuple[int, ...]) -> int:
    top = max(ms)
    cand = top
    while any(cand % mi for mi in ms):
        cand += top
    return cand


# -- vectorised evaluation over pairs of true claims ----------------------

_CHUNK = 256


def _claim_arrays(m: int, bounds: Bounds) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    v = bounds.max_value
    dtype = np.int64 if v <= 10**6 else object
    vals = np.arange(-v, v + 1, dtype=dtype)
    a, b, r = (x.ravel() for x in np.meshgrid(vals, vals, vals, indexing="ij"))
    keep = (a - b - r) % m == 0
    return a[keep], b[keep], r[keep]


def _pairwise(
    bounds: Bounds,
    limit: int | None,
    check: Callable[..., tuple[np.ndarray, np.ndarray]],
    prefix: Callable[[int], tuple] = lambda m: (m,),
    moduli: Iterable[int] | None = None,
) -> Iterator[tuple[int, int, list[tuple]]]:
    """Evaluate ``check`` on every (first claim, second claim) pair for each m.

    ``check(m, a, b, r1, c, d, r2)`` returns ``(premise, ok)`` boolean arrays
    of shape ``(rows, cols)``.
    """
    taken = 0
    for m in moduli if moduli is not None else _moduli(bounds):
        A, B, R = _claim_arrays(m, bounds)
        for lo in range(0, len(A), _CHUNK):
            sl = slice(lo, lo + _CHUNK)
            premise, ok = check(
                m, A[sl, None], B[sl, None], R[sl, None], A[None, :], B[None, :], R[None, :]
            )
            bad = premise & ~ok
            n_bad = int(bad.sum())
            examples = []
            if n_bad and (limit is None or taken < limit):
                rows, cols = np.nonzero(bad)
                want = n_bad if limit is None else min(n_bad, limit - taken)
                for i, j in zip(rows[:want], cols[:want]):
                    i += lo
                    examples.append(
                        prefix(m) + (int(A[i]), int(B[i]), int(R[i]), int(A[j]), int(B[j]), int(R[j]))
                    )
                taken += len(examples)
            yield int(premise.sum()), n_bad, examples


def _claim_pairs(bounds: Bounds, signs: tuple[int, ...] = ()) -> Iterator[tuple]:
    for s in signs or (None,):
        for m in _moduli(bounds):
            claims = list(_true_claims(m, bounds))
            for first, second in itertools.product(claims, claims):
                head = (m,) if s is None else (s, m)
                yield head + first + second


# -- L2.3 --------------------------------------------------------------------


def _l23(m: int, r: int, a: int, b: int) -> bool:
    holds, gaussian, trivial = _cong(a, b, r, m), _cong(a, b, 0, m), _divides(m, r)
    if holds and trivial != gaussian:
        return False
    return not trivial or holds == gaussian


def _grid_mrab(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    return itertools.product(_moduli(bounds), vals, vals, vals)


# -- L2.4 --------------------------------------------------------------------


def _l24_reflexive(m: int, a: int) -> bool:
    return _cong(a, a, 0, m)


def _l24_symmetric(m: int, a: int, b: int, r: int) -> bool:
    return _cong(a, b, r, m) == _cong(b, a, -r, m)


def _l24_transitive(m: int, a: int, b: int, r1: int, c: int, r2: int) -> bool:
    if not (_cong(a, b, r1, m) and _cong(b, c, r2, m)):
        return True
    return _cong(a, c, r1 + r2, m)


def _grid_transitive(bounds: Bounds) -> Iterator[tuple]:
    for m in _moduli(bounds):
        claims = list(_true_claims(m, bounds))
        for a, b, r1 in claims:
            for b2, c, r2 in claims:
                if b2 == b:
                    yield m, a, b, r1, c, r2


def _batch_transitive(bounds: Bounds, limit: int | None) -> Iterator[tuple[int, int, list[tuple]]]:
    def check(m, a, b, r1, b2, c, r2):
        premise = np.broadcast_to(b == b2, (a.shape[0], b2.shape[1]))
        return premise, (a - c - (r1 + r2)) % m == 0

    for cases, n_bad, examples in _pairwise(bounds, limit, check):
        # drop the duplicated link value b2 from reported tuples
        yield cases, n_bad, [(m, a, b, r1, c, r2) for (m, a, b, r1, _b2, c, r2) in examples]


# -- L2.5 --------------------------------------------------------------------


def _l25_formula(m: int, r: int, a: int) -> bool:
    lo, hi = -m - abs(r), m + abs(r)
    related = {x for x in range(lo, hi + 1) if _cong(x, a, r, m)}
    shifted = {y + r for y in range(lo - r, hi - r + 1) if (y - a) % m == 0}
    library = set(make_class(a, m, r).members(lo, hi))
    classical_label = make_class(a, m, 0).rho
    return related == shifted == library and make_class(a, m, r).rho == (classical_label + r) % m


def _l25_equivalence(m: int, r: int, a: int, b: int, c: int) -> bool:
    if not _cong(a, a, r, m):
        return False
    if _cong(a, b, r, m) != _cong(b, a, r, m):
        return False
    return not (_cong(a, b, r, m) and _cong(b, c, r, m)) or _cong(a, c, r, m)


def _grid_mra(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    return itertools.product(_moduli(bounds), vals, vals)


def _grid_mr_abc(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    return itertools.product(_moduli(bounds), vals, vals, vals, vals)


# -- L2.7 --------------------------------------------------------------------


def _l27i_literal(m: int, a: int, r1: int, r2: int) -> bool:
    equal = _window(a, r1, m) == _window(a, r2, m)
    return equal == (_divides(r1, r2) or _divides(r2, r1))


def _l27i_mod(m: int, a: int, r1: int, r2: int) -> bool:
    equal = _window(a, r1, m) == _window(a, r2, m)
    library = class_eq(make_class(a, m, r1), make_class(a, m, r2))
    return equal == library == ((r1 - r2) % m == 0)


def _grid_m_a_r1_r2(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    return itertools.product(_moduli(bounds), vals, vals, vals)


def _l27ii(m: int, r: int, a: int, b: int) -> bool:
    equal = _window(a, r, m) == _window(b, r, m)
    library = class_eq(make_class(a, m, r), make_class(b, m, r))
    return equal == library == (a % m == b % m)


# -- T2.8 --------------------------------------------------------------------


def _t28(m: int, r: int) -> bool:
    classes = {_window(a, r, m) for a in range(-2 * m, 2 * m)}
    table = class_table(m, r)
    rows = [c for _, c in table.rows]
    library = {frozenset(c.members(-m, m - 1)) for c in rows}
    return len(classes) == m and len(set(rows)) == m and library == classes


def _grid_mr(bounds: Bounds) -> Iterator[tuple]:
    return itertools.product(_moduli(bounds), _values(bounds))


# -- T2.9 --------------------------------------------------------------------


def _t29_claimed(m: int, r: int) -> bool:
    claimed = 1 if r % m == 0 else m
    return _brute_order(m, r) == claimed


def _t29_true(m: int, r: int) -> bool:
    f = shift_permutation(m, r)
    brute = _brute_order(m, r)
    return brute == order(f) == m // math.gcd(r, m) == len(generated_subgroup(f))


def _t29_detail(m: int, r: int) -> dict[str, Any]:
    return {"true_order": _brute_order(m, r), "claimed_order": 1 if r % m == 0 else m}


def _grid_shift(bounds: Bounds) -> Iterator[tuple]:
    for m in _moduli(bounds):
        for r in range(m):
            yield m, r


# -- L2.10 -------------------------------------------------------------------


def _l210i(sign: int, m: int, a: int, b: int, r1: int, c: int, d: int, r2: int) -> bool:
    if not (_cong(a, b, r1, m) and _cong(c, d, r2, m)):
        return True
    return _cong(a + sign * c, b + sign * d, r1 + sign * r2, m)


def _batch_l210i(bounds: Bounds, limit: int | None) -> Iterator[tuple[int, int, list[tuple]]]:
    taken = 0
    for sign in (1, -1):
        def check(m, a, b, r1, c, d, r2, s=sign):
            ok = (a + s * c - (b + s * d) - (r1 + s * r2)) % m == 0
            return np.ones(ok.shape, dtype=bool), ok

        left = None if limit is None else limit - taken
        for item in _pairwise(bounds, left, check, prefix=lambda m, s=sign: (s, m)):
            taken += len(item[2])
            yield item


def _l210ii(m: int, a: int, b: int, r1: int, c: int, d: int, r2: int) -> bool:
    if not (_cong(a, b, r1, m) and _cong(c, d, r2, m)):
        return True
    return _cong(a * c, b * d, r1 * d + r2 * b + r1 * r2, m)


def _batch_l210ii(bounds: Bounds, limit: int | None) -> Iterator[tuple[int, int, list[tuple]]]:
    def check(m, a, b, r1, c, d, r2):
        ok = (a * c - b * d - (r1 * d + r2 * b + r1 * r2)) % m == 0
        return np.ones(ok.shape, dtype=bool), ok

    return _pairwise(bounds, limit, check)


def _l210iii(m: int, a: int, b: int, r: int, c: int) -> bool:
    return not _cong(a, b, r, m) or _cong(c * a, c * b, c * r, m)


def _grid_scale(bounds: Bounds) -> Iterator[tuple]:
    for m in _moduli(bounds):
        for a, b, r in _true_claims(m, bounds):
            for c in range(1, bounds.max_value + 1):
                yield m, a, b, r, c


def _l210iv(m: int, d: int, a: int, b: int, r: int) -> bool:
    if m % d or not _cong(a, b, r, m):
        return True
    return _cong(a, b, r, d)


def _grid_divisor(bounds: Bounds) -> Iterator[tuple]:
    for m in _moduli(bounds):
        claims = list(_true_claims(m, bounds))
        for d in range(1, m + 1):
            if m % d == 0:
                for a, b, r in claims:
                    yield m, d, a, b, r


def _l210v(m: int, a: int, b: int, r: int, k: int) -> bool:
    if not _cong(a, b, r, m):
        return True
    index = (r + b) ** k - b**k
    return _cong(a**k, b**k, index, m) and (r != 0 or index == 0)


def _grid_power(bounds: Bounds) -> Iterator[tuple]:
    for m in _moduli(bounds):
        for a, b, r in _true_claims(m, bounds):
            for k in range(1, bounds.max_k + 1):
                yield m, a, b, r, k


# -- L2.11 -------------------------------------------------------------------


def _l211(moduli: tuple[int, ...], a: int, b: int, r: int) -> bool:
    each = all(_cong(a, b, r, mi) for mi in moduli)
    return each == _cong(a, b, r, _brute_lcm(tuple(moduli)))


def _moduli_lists(bounds: Bounds) -> Iterator[tuple[int, ...]]:
    for n in range(1, bounds.max_moduli + 1):
        yield from itertools.combinations_with_replacement(_moduli(bounds), n)


def _grid_lcm(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    for ms in _moduli_lists(bounds):
        for a, b, r in itertools.product(vals, vals, vals):
            yield ms, a, b, r


def _batch_lcm(bounds: Bounds, limit: int | None) -> Iterator[tuple[int, int, list[tuple]]]:
    v = bounds.max_value
    vals = np.arange(-v, v + 1, dtype=np.int64 if v <= 10**6 else object)
    A, B, R = (x.ravel() for x in np.meshgrid(vals, vals, vals, indexing="ij"))
    T = A - B - R
    taken = 0
    for ms in _moduli_lists(bounds):
        each = np.ones(T.shape, dtype=bool)
        for mi in ms:
            each &= T % mi == 0
        bad = each != (T % _brute_lcm(ms) == 0)
        n_bad = int(bad.sum())
        examples = []
        if n_bad and (limit is None or taken < limit):
            idx = np.nonzero(bad)[0]
            idx = idx if limit is None else idx[: limit - taken]
            examples = [(ms, int(A[i]), int(B[i]), int(R[i])) for i in idx]
            taken += len(examples)
        yield len(T), n_bad, examples


# -- L2.12 -------------------------------------------------------------------


def _l212(m: int, c: int, a: int, b: int, r: int) -> bool:
    if c == 0 or not _divides(c, r) or not _cong(c * a, c * b, r, m):
        return True
    return _cong(a, b, r // c, m // math.gcd(c, m))


def _grid_cancel(bounds: Bounds) -> Iterator[tuple]:
    vals = _values(bounds)
    for m in _moduli(bounds):
        for c in vals:
            if c == 0:
                continue
            for a, b, r in itertools.product(vals, vals, vals):
                if r % c == 0 and _cong(c * a, c * b, r, m):
                    yield m, c, a, b, r


# -- L2.13 -------------------------------------------------------------------


def _l213(m: int, a: int, b: int, r: int) -> bool:
    brute = [x for x in range(m) if _cong(a * x, b, r, m)]
    criterion = _divides(math.gcd(a, m), b + r)
    return bool(brute) == criterion and list(solve_linear(a, b, r, m).solutions) == brute


# -- T2.14 -------------------------------------------------------------------


def _t214_set_level(m: int, a: int, r1: int, r2: int) -> bool:
    # psi reads the index off the set; equal sets must carry equal indices
    return _window(a, r1, m) != _window(a, r2, m) or r1 == r2


def _t214_homomorphism(m: int, a: int, r1: int, r2: int) -> bool:
    ring = ResidueRing(m, a)
    x, y = ring.element(r1), ring.element(r2)
    return (
        psi(x + y) == psi(x) + psi(y)
        and psi(x * y) == psi(x) * psi(y)
        and (x == y) == (r1 == r2)
        and psi(ring.zero) == 0
        and psi(ring.one) == 1
        and to_class(x) == make_class(a, m, r1)
    )


def _t214_axioms(m: int, r1: int, r2: int, r3: int) -> bool:
    ring = ResidueRing(m)
    x, y, z = ring.element(r1), ring.element(r2), ring.element(r3)
    zero, one = ring.zero, ring.one
    return (
        (x + y) + z == x + (y + z)
        and (x * y) * z == x * (y * z)
        and x + y == y + x
        and x * y == y * x
        and x * (y + z) == x * y + x * z
        and (x + y) * z == x * z + y * z
        and x + zero == x
        and x * one == x
        and x + (-x) == zero
    )


# -- registry ----------------------------------------------------------------


def _part(name, params, domain, grid, predicate, detail=None, batch=None) -> Part:
    return Part(name, tuple(params.split()), domain, grid, predicate, detail, batch)


def _single(lemma: str, name: str, statement: str, *parts: Part) -> Reading:
    return Reading(lemma, name, statement, parts)


_ALL_MRAB = "m in 1..M; r, a, b in [-V, V]"
_TRUE_CLAIMS = "true claims (a, b, r) with |a|, |b|, |r| <= V, m in 1..M"

LEMMAS: dict[str, Lemma] = {
    lemma.id: lemma
    for lemma in [
        Lemma("L2.3", _single(
            "L2.3", "literal",
            "an r-congruence has r in mZ iff it is a classical congruence",
            _part("trivial-iff-gaussian", "m r a b", _ALL_MRAB, _grid_mrab, _l23),
        )),
        Lemma("L2.4", _single(
            "L2.4", "literal",
            "a ≡_0 a; a ≡_r b iff b ≡_-r a; a ≡_r1 b and b ≡_r2 c give a ≡_(r1+r2) c",
            _part("reflexive", "m a", "m in 1..M; a in [-V, V]",
                  lambda bd: itertools.product(_moduli(bd), _values(bd)), _l24_reflexive),
            _part("symmetric", "m a b r", "m in 1..M; a, b, r in [-V, V]",
                  lambda bd: itertools.product(_moduli(bd), _values(bd), _values(bd), _values(bd)),
                  _l24_symmetric),
            _part("transitive", "m a b r1 c r2", "chained pairs of " + _TRUE_CLAIMS,
                  _grid_transitive, _l24_transitive, batch=_batch_transitive),
        )),
        Lemma(
            "L2.5",
            _single(
                "L2.5", "class-formula",
                "the class of a under ≡_r (mod m) is the classical class of a shifted by r",
                _part("class-formula", "m r a", "m in 1..M; r, a in [-V, V]", _grid_mra, _l25_formula),
            ),
            (_single(
                "L2.5", "equivalence-relation",
                "≡_r (mod m) is reflexive, symmetric and transitive for fixed r",
                _part("equivalence", "m r a b c", "m in 1..M; r, a, b, c in [-V, V]",
                      _grid_mr_abc, _l25_equivalence),
            ),),
        ),
        Lemma(
            "L2.7i",
            _single(
                "L2.7i", "literal",
                "the classes of a for r1 and r2 coincide iff r1 divides r2 or r2 divides r1",
                _part("divisibility", "m a r1 r2", "m in 1..M; a, r1, r2 in [-V, V]",
                      _grid_m_a_r1_r2, _l27i_literal),
            ),
            (_single(
                "L2.7i", "mod-m",
                "the classes of a for r1 and r2 coincide iff r1 ≡ r2 (mod m)",
                _part("congruent-indices", "m a r1 r2", "m in 1..M; a, r1, r2 in [-V, V]",
                      _grid_m_a_r1_r2, _l27i_mod),
            ),),
        ),
        Lemma("L2.7ii", _single(
            "L2.7ii", "literal",
            "the r-classes of a and b coincide iff a ≡ b (mod m)",
            _part("label-equality", "m r a b", _ALL_MRAB, _grid_mrab, _l27ii),
        )),
        Lemma("T2.8", _single(
            "T2.8", "literal",
            "there are exactly m distinct r-classes modulo m",
            _part("count", "m r", "m in 1..M; r in [-V, V]", _grid_mr, _t28),
        )),
        Lemma(
            "T2.9-order",
            _single(
                "T2.9-order", "claimed-order",
                "the shift by r has order 1 if r in mZ and order m otherwise",
                _part("order", "m r", "m in 1..M; r in [0, m)", _grid_shift, _t29_claimed,
                      detail=_t29_detail),
            ),
            (_single(
                "T2.9-order", "true-order",
                "the shift by r has order m / gcd(r, m), equal to its subgroup size",
                _part("order", "m r", "m in 1..M; r in [0, m)", _grid_shift, _t29_true,
                      detail=_t29_detail),
            ),),
        ),
        Lemma("L2.10i", _single(
            "L2.10i", "literal",
            "a ≡_r1 b and c ≡_r2 d give a ± c ≡_(r1 ± r2) b ± d",
            _part("sum", "sign m a b r1 c d r2", "sign in (+1, -1); pairs of " + _TRUE_CLAIMS,
                  lambda bd: _claim_pairs(bd, (1, -1)), _l210i, batch=_batch_l210i),
        )),
        Lemma("L2.10ii", _single(
            "L2.10ii", "literal",
            "a ≡_r1 b and c ≡_r2 d give ac ≡_(r1 d + r2 b + r1 r2) bd",
            _part("product", "m a b r1 c d r2", "pairs of " + _TRUE_CLAIMS,
                  _claim_pairs, _l210ii, batch=_batch_l210ii),
        )),
        Lemma("L2.10iii", _single(
            "L2.10iii", "literal",
            "a ≡_r b and c > 0 give ca ≡_cr cb",
            _part("scale", "m a b r c", _TRUE_CLAIMS + "; c in 1..V", _grid_scale, _l210iii),
        )),
        Lemma("L2.10iv", _single(
            "L2.10iv", "literal",
            "a ≡_r b (mod m) and d | m give a ≡_r b (mod d)",
            _part("divisor", "m d a b r", _TRUE_CLAIMS + "; positive d dividing m",
                  _grid_divisor, _l210iv),
        )),
        Lemma("L2.10v", _single(
            "L2.10v", "literal",
            "a ≡_r b gives a^k ≡_f b^k with f = (r + b)^k - b^k, and f = 0 when r = 0",
            _part("power", "m a b r k", _TRUE_CLAIMS + "; k in 1..K", _grid_power, _l210v),
        )),
        Lemma("L2.11", _single(
            "L2.11", "literal",
            "a ≡_r b modulo every m_i iff a ≡_r b modulo lcm(m_1, ..., m_n)",
            _part("lcm", "moduli a b r", "nondecreasing moduli lists of length 1..N over 1..M; "
                  "a, b, r in [-V, V]", _grid_lcm, _l211, batch=_batch_lcm),
        )),
        Lemma("L2.12", _single(
            "L2.12", "literal",
            "ca ≡_r cb (mod m) with c | r gives a ≡_(r/c) b (mod m / gcd(c, m))",
            _part("cancel", "m c a b r", "m in 1..M; nonzero c, a, b, r in [-V, V] with c | r "
                  "and the premise true", _grid_cancel, _l212),
        )),
        Lemma("L2.13", _single(
            "L2.13", "literal",
            "ax ≡_r b (mod m) is solvable iff gcd(a, m) | (b + r)",
            _part("solvable", "m a b r", "m in 1..M; a, b, r in [-V, V]; x searched over [0, m)",
                  lambda bd: itertools.product(_moduli(bd), _values(bd), _values(bd), _values(bd)),
                  _l213),
        )),
        Lemma(
            "T2.14-psi",
            _single(
                "T2.14-psi", "set-level",
                "psi sends each r-class (as a set of integers) to a single index r, injectively",
                _part("well-defined", "m a r1 r2", "m in 1..M; a, r1, r2 in [-V, V]",
                      _grid_m_a_r1_r2, _t214_set_level),
            ),
            (_single(
                "T2.14-psi", "formal",
                "on formal elements indexed by r the ring laws hold and psi is a bijective "
                "homomorphism onto Z",
                _part("homomorphism", "m a r1 r2", "m in 1..M; a, r1, r2 in [-V, V]",
                      _grid_m_a_r1_r2, _t214_homomorphism),
                _part("ring-axioms", "m r1 r2 r3", "m in 1..M; r1, r2, r3 in [-V, V]",
                      _grid_m_a_r1_r2, _t214_axioms),
            ),),
        ),
    ]
}

LEMMA_IDS: tuple[str, ...] = tuple(LEMMAS)


def _lookup(lemma: str) -> Lemma:
    try:
        return LEMMAS[lemma]
    except KeyError:
        raise UnknownLemma(f"unknown lemma id {lemma!r}; known: {', '.join(LEMMA_IDS)}") from None


def _record(part: Part, values: tuple) -> dict[str, Any]:
    rec: dict[str, Any] = {"part": part.name}
    for name, value in zip(part.params, values):
        rec[name] = list(value) if isinstance(value, tuple) else value
    if part.detail is not None:
        rec.update(part.detail(*values))
    return rec


def _run_part(part: Part, bounds: Bounds, limit: int | None, use_batch: bool) -> tuple[int, int, list[tuple]]:
    cases = failures = 0
    examples: list[tuple] = []
    if use_batch and part.batch is not None:
        for n, n_bad, found in part.batch(bounds, limit):
            cases += n
            failures += n_bad
            examples.extend(found)
        return cases, failures, examples
    for values in part.grid(bounds):
        cases += 1
        if not part.predicate(*values):
            failures += 1
            if limit is None or len(examples) < limit:
                examples.append(values)
    return cases, failures, examples


def _run_reading(reading: Reading, bounds: Bounds, limit: int | None, use_batch: bool,
                 alternatives: tuple[VerificationReport, ...] = ()) -> VerificationReport:
    cases = failures = 0
    records: list[dict[str, Any]] = []
    for part in reading.parts:
        left = None if limit is None else max(limit - len(records), 0)
        n, n_bad, examples = _run_part(part, bounds, left, use_batch)
        cases += n
        failures += n_bad
        records.extend(_record(part, values) for values in examples)
    grid = {
        "bounds": asdict(bounds),
        "parts": [{"name": p.name, "params": list(p.params), "domain": p.domain} for p in reading.parts],
    }
    return VerificationReport(
        lemma=reading.lemma,
        reading=reading.name,
        statement=reading.statement,
        grid=grid,
        cases_checked=cases,
        verdict=Verdict.FALSIFIED if failures else Verdict.CONFIRMED,
        counterexample_count=failures,
        counterexamples=tuple(records),
        alternatives=alternatives,
    )


def verify(lemma: str, bounds: Bounds | None = None, limit: int | None = 10,
           use_batch: bool = True) -> VerificationReport:
    """Check one statement over every point of the grid.

    ``limit`` caps the stored counterexamples (``None`` keeps all); the
    count is always exact. ``use_batch=False`` forces the scalar path.
    """
    entry = _lookup(lemma)
    bounds = bounds or Bounds()
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    alts = tuple(_run_reading(alt, bounds, limit, use_batch) for alt in entry.alternatives)
    return _run_reading(entry.headline, bounds, limit, use_batch, alts)


def verify_all(bounds: Bounds | None = None, limit: int | None = 10,
               use_batch: bool = True) -> list[VerificationReport]:
    return [verify(lemma, bounds, limit, use_batch) for lemma in LEMMA_IDS]


def recheck(lemma: str, counterexample: dict[str, Any], reading: str | None = None) -> bool:
    """Re-evaluate a reported point standalone; False means it is a genuine counterexample."""
    entry = _lookup(lemma)
    readings = {r.name: r for r in (entry.headline, *entry.alternatives)}
    chosen = readings[reading] if reading else entry.headline
    part = next(p for p in chosen.parts if p.name == counterexample["part"])
    values = [counterexample[name] for name in part.params]
    values = [tuple(v) if isinstance(v, list) else v for v in values]
    return part.predicate(*values)
