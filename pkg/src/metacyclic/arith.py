"""Number-theoretic primitives: orders, valuations, totients, r-splitting.

Everything here is exact integer arithmetic on small inputs; the callers
cap sizes, so trial division is always fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InternalInconsistencyError, ValidationError


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def phi_pk(p: int, exp: int) -> int:
    """Euler phi of p^exp for prime p, with phi(p^0) = 1. No validation."""
    if exp == 0:
        return 1
    return p ** exp - p ** (exp - 1)


@dataclass(frozen=True)
class PrimePower:
    """p^exp for an odd prime p: the modulus/conductor type used throughout."""

    p: int
    exp: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p < 3:
            raise ValidationError(f"p must be an odd prime, got {self.p}")
        if self.exp < 0:
            raise ValidationError(f"exponent must be >= 0, got {self.exp}")

    @property
    def value(self) -> int:
        return self.p ** self.exp


def euler_phi_prime_power(q: PrimePower) -> int:
    return phi_pk(q.p, q.exp)


def p_adic_valuation(x: int, p: int) -> int:
    """w_p(x): the exact exponent of p in x. Undefined (rejected) for x = 0."""
    if x == 0:
        raise ValidationError("p-adic valuation of 0 is undefined")
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    x = abs(x)
    w = 0
    while x % p == 0:
        x //= p
        w += 1
    return w


def _divisors_sorted(x: int) -> list[int]:
    out = []
    for d in range(1, isqrt(x) + 1):
        if x % d == 0:
            out.append(d)
            if d != x // d:
                out.append(x // d)
    return sorted(out)


def multiplicative_order(r: int, modulus: PrimePower) -> int:
    """Least e >= 1 with r^e = 1 mod p^exp.

    Tries the divisors of phi(p^exp) in increasing order with exact modular
    exponentiation; r must be a unit.
    """
    q = modulus.value
    if q < 2:
        raise ValidationError("modulus must be >= 2")
    r = r % q
    if gcd(r, modulus.p) != 1:
        raise ValidationError(f"r={r} is not coprime to p={modulus.p}")
    for e in _divisors_sorted(euler_phi_prime_power(modulus)):
        if pow(r, e, q) == 1:
            return e
    raise InternalInconsistencyError("unit order does not divide phi(p^n)")


def split_r(r: int, p: int, n: int) -> tuple[int, int]:
    """Decompose r = 1 + k * p^(n-s) mod p^n with 1 <= k < p^s, gcd(k, p) = 1.

    The multiplicative order of such r mod p^n is exactly p^s; that is
    re-checked before returning. r = 1 mod p^n (the abelian case) and
    r != 1 mod p (order not a p-power) are rejected.
    """
    if not is_prime(p) or p < 3:
        raise ValidationError(f"p must be an odd prime, got {p}")
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    q = p ** n
    r = r % q
    if (r - 1) % p != 0:
        raise ValidationError(
            f"r={r} is not 1 mod {p}: its order mod {p}^{n} is not a p-power"
        )
    if r == 1:
        raise ValidationError("r = 1 mod p^n is the abelian case")
    d = r - 1  # 0 < d < p^n
    w = p_adic_valuation(d, p)  # 1 <= w < n
    s = n - w
    k = d // p ** w
    if not (1 <= k < p ** s) or k % p == 0:
        raise InternalInconsistencyError(f"bad split r={r}: k={k}, s={s}")
    if multiplicative_order(r, PrimePower(p, n)) != p ** s:
        raise InternalInconsistencyError(
            f"order of r={r} mod {p}^{n} is not p^{s}"
        )
    return k, s
