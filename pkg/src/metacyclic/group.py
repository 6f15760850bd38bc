"""The split metacyclic p-group <a, b | a^(p^n) = b^(p^m) = 1, b a b^-1 = a^r>.

Validated presentation parameters, normal-form elements a^i b^j,
multiplication, and brute-force conjugacy classes for oracle-side checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .arith import is_prime, split_r
from .errors import InternalInconsistencyError, SizeBoundError, ValidationError

# Validation caps: closed-form paths stay exact well past these, but the
# point of the bounds is predictable desk-scale behaviour, not generality.
FORMULA_ORDER_BOUND = 10 ** 7
ORACLE_ORDER_BOUND = 10 ** 4


class GroupElement(NamedTuple):
    """Normal form a^i b^j with 0 <= i < p^n, 0 <= j < p^m."""

    i: int
    j: int


@dataclass(frozen=True)
class GroupParams:
    """Validated presentation data (p, n, m, r) with derived (s, k).

    s is the exponent of the order of r mod p^n (order = p^s) and
    r = 1 + k * p^(n-s) with gcd(k, p) = 1. Abelian mode (r = 1, s = 0)
    is a first-class state so the commutative case stays testable.
    Instances are immutable and shareable across threads.
    """

    p: int
    n: int
    m: int
    r: int
    s: int
    k: int
    abelian: bool = False

    @property
    def order(self) -> int:
        return self.p ** (self.n + self.m)

    @property
    def canonical_r(self) -> int:
        """The representative twist 1 + p^(n-s): same group, same invariants."""
        if self.abelian:
            return 1
        return 1 + self.p ** (self.n - self.s)


def validate(p: int, n: int, m: int, r: int, *, abelian: bool = False) -> GroupParams:
    """Check a presentation and derive (s, k); the only constructor.

    Rejects non-prime or even p, exponent ranges outside the presentation's
    scope, r not coprime to p, r whose order mod p^n is not a p-power, and
    s > m (the presentation would not define a group of order p^(n+m)).
    r is reduced mod p^n first. r = 1 mod p^n is only allowed with
    abelian=True.
    """
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p}")
    if p == 2:
        raise ValidationError("p = 2 is out of scope (odd primes only)")
    if abelian:
        if n < 0 or m < 0 or n + m < 1:
            raise ValidationError(f"abelian mode needs n, m >= 0, n+m >= 1, got ({n}, {m})")
    else:
        if n < 2:
            raise ValidationError(f"n must be >= 2, got {n}")
        if m < 1:
            raise ValidationError(f"m must be >= 1, got {m}")
    order = p ** (n + m)
    if order > FORMULA_ORDER_BOUND:
        raise SizeBoundError(
            f"|G| = {p}^{n + m} exceeds the supported bound {FORMULA_ORDER_BOUND}"
        )
    q = p ** n
    r = r % q
    if abelian:
        if r != 1 % q:
            raise ValidationError(f"abelian mode requires r = 1 mod p^n, got r={r}")
        return GroupParams(p, n, m, 1 % q, 0, 0, abelian=True)
    if gcd(r, p) != 1:
        raise ValidationError(f"r={r} is not coprime to p={p}")
    if r == 1:
        raise ValidationError("r = 1 mod p^n: abelian presentation (pass abelian=True)")
    k, s = split_r(r, p, n)  # rejects r != 1 mod p, re-checks the order
    if s > m:
        raise ValidationError(
            f"s={s} > m={m}: b^(p^m)=1 forces r^(p^m)=1 mod p^n, i.e. s <= m"
        )
    return GroupParams(p, n, m, r, s, k)


def from_s(p: int, n: int, m: int, s: int) -> GroupParams:
    """Parameters with the canonical twist r = 1 + p^(n-s); s = 0 is abelian."""
    if s == 0:
        return validate(p, n, m, 1, abelian=True)
    if not 1 <= s <= n - 1:
        raise ValidationError(f"s must satisfy 1 <= s <= n-1, got s={s}, n={n}")
    return validate(p, n, m, 1 + p ** (n - s))


@lru_cache(maxsize=128)
def _r_power_table(params: GroupParams) -> tuple[int, ...]:
    """r^j mod p^n for j = 0..p^m-1; multiply's hot-path lookup."""
    q = params.p ** params.n
    table = [1] * (params.p ** params.m)
    for j in range(1, len(table)):
        table[j] = (table[j - 1] * params.r) % q
    return tuple(table)


def identity() -> GroupElement:
    return GroupElement(0, 0)


def multiply(g: GroupElement, h: GroupElement, params: GroupParams) -> GroupElement:
    """(a^i b^j)(a^i' b^j') = a^(i + i' r^j) b^(j + j')."""
    qa = params.p ** params.n
    qb = params.p ** params.m
    rj = _r_power_table(params)[g.j]
    return GroupElement((g.i + h.i * rj) % qa, (g.j + h.j) % qb)


def inverse(g: GroupElement, params: GroupParams) -> GroupElement:
    qa = params.p ** params.n
    qb = params.p ** params.m
    jinv = (-g.j) % qb
    rji = _r_power_table(params)[jinv]
    return GroupElement((-g.i * rji) % qa, jinv)


def power(g: GroupElement, e: int, params: GroupParams) -> GroupElement:
    if e < 0:
        return power(inverse(g, params), -e, params)
    acc = identity()
    base = g
    while e:
        if e & 1:
            acc = multiply(acc, base, params)
        base = multiply(base, base, params)
        e >>= 1
    return acc


def conjugate(x: GroupElement, g: GroupElement, params: GroupParams) -> GroupElement:
    """g x g^-1."""
    return multiply(multiply(g, x, params), inverse(g, params), params)


def _conj_by_a(x: GroupElement, params: GroupParams) -> GroupElement:
    # a (a^i b^j) a^-1 = a^(i + 1 - r^j) b^j
    qa = params.p ** params.n
    return GroupElement((x.i + 1 - _r_power_table(params)[x.j]) % qa, x.j)


def _conj_by_b(x: GroupElement, params: GroupParams) -> GroupElement:
    # b (a^i b^j) b^-1 = a^(i r) b^j
    qa = params.p ** params.n
    return GroupElement((x.i * params.r) % qa, x.j)


def conjugacy_classes(params: GroupParams) -> list[tuple[GroupElement, ...]]:
    """Exact partition of all p^(n+m) elements under conjugation.

    Orbit closure under conjugation by the two generators only; on a finite
    set that already yields the orbits of the full group. The class count
    is checked against the closed-form count of irreducible characters
    (p^(n+m-s) + p^(n+m-s-1) - p^(n+m-2s-1) in the non-abelian case).
    Bounded by ORACLE_ORDER_BOUND.
    """
    if params.order > ORACLE_ORDER_BOUND:
        raise SizeBoundError(
            f"|G| = {params.order} exceeds the oracle bound {ORACLE_ORDER_BOUND}"
        )
    qa = params.p ** params.n
    qb = params.p ** params.m
    seen = [False] * (qa * qb)
    classes = []
    for i0 in range(qa):
        for j0 in range(qb):
            if seen[i0 * qb + j0]:
                continue
            start = GroupElement(i0, j0)
            seen[i0 * qb + j0] = True
            orbit = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for y in (_conj_by_a(x, params), _conj_by_b(x, params)):
                    idx = y.i * qb + y.j
                    if not seen[idx]:
                        seen[idx] = True
                        orbit.append(y)
                        stack.append(y)
            classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda cls: cls[0])
    p, e, s = params.p, params.n + params.m, params.s
    expected = p ** e if params.abelian else (
        p ** (e - s) + p ** (e - s - 1) - p ** (e - 2 * s - 1)
    )
    if len(classes) != expected:
        raise InternalInconsistencyError(
            f"{len(classes)} conjugacy classes, expected {expected}"
        )
    return classes


def _subgroup_closure(gens, params: GroupParams) -> set[GroupElement]:
    members = {identity()}
    frontier = [identity()]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = multiply(x, g, params)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return members


def derived_subgroup(params: GroupParams) -> set[GroupElement]:
    """Commutator subgroup by brute force: the normal closure of the
    commutators of the generators (oracle-scale only)."""
    if params.order > ORACLE_ORDER_BOUND:
        raise SizeBoundError(
            f"|G| = {params.order} exceeds the oracle bound {ORACLE_ORDER_BOUND}"
        )
    a, b = GroupElement(1, 0), GroupElement(0, 1)
    gens = set()
    for x, y in ((a, b), (b, a)):
        comm = multiply(
            multiply(x, y, params),
            multiply(inverse(x, params), inverse(y, params), params),
            params,
        )
        gens.add(comm)
    while True:
        members = _subgroup_closure(gens, params)
        new = {
            conj(x, params)
            for x in members
            for conj in (_conj_by_a, _conj_by_b)
        } - members
        if not new:
            return members
        gens |= new
