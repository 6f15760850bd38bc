"""Irreducible complex characters of the non-abelian split metacyclic group.

The little-group construction specialised to N = <a> normal cyclic and
H = <b>: the b-action on Irr(N) is chi_k -> chi_{rk}, its orbits are
singletons {chi_{lam p^s}} plus orbits of size p^t indexed by a canonical
unit label l, and each orbit together with a character omega^u of the
inertia quotient yields one irreducible character of G. Characters are
stored as parameter tuples with an exact value function; full value tables
exist only inside the verification code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .arith import phi_pk
from .cyclotomic import CyclotomicElement, root_power
from .errors import InternalInconsistencyError, ValidationError
from .group import GroupElement, GroupParams


@dataclass(frozen=True, order=True)
class LinearOrbit:
    """Singleton orbit {chi_{lam p^s}}, 0 <= lam < p^(n-s)."""

    lam: int


@dataclass(frozen=True, order=True)
class InducedOrbit:
    """Orbit of size p^t with canonical label l: the minimum of
    {l r^i mod p^(n-s+t)} over the orbit, coprime to p."""

    t: int
    l: int


OrbitDescriptor = Union[LinearOrbit, InducedOrbit]


@dataclass(frozen=True)
class IrreducibleCharacter:
    """A parameterized irreducible character: orbit + exponent u of omega.

    Linear (degree 1): value zeta_{p^n}^(lam p^s i) * zeta_{p^m}^(u j).
    Induced (degree p^t): omega = zeta_{p^(m-t)}^u; values given by
    `character_value`. The tuple form (see `key`) orders characters
    deterministically.
    """

    orbit: OrbitDescriptor
    u: int
    degree: int

    def key(self) -> tuple:
        if isinstance(self.orbit, LinearOrbit):
            return (0, 0, self.orbit.lam, self.u)
        return (1, self.orbit.t, self.orbit.l, self.u)

    @property
    def is_linear(self) -> bool:
        return isinstance(self.orbit, LinearOrbit)


@lru_cache(maxsize=256)
def _orbit_step_table(params: GroupParams, t: int) -> tuple[int, ...]:
    """Powers r^i mod p^(n-s+t) for i = 0..p^t-1: one full orbit of steps."""
    q = params.p ** (params.n - params.s + t)
    table = [1] * (params.p ** t)
    for i in range(1, len(table)):
        table[i] = (table[i - 1] * params.r) % q
    return tuple(table)


def canonical_orbit_label(params: GroupParams, t: int, l: int) -> int:
    """Minimal element of the orbit {l r^i mod p^(n-s+t)} of the unit l."""
    q = params.p ** (params.n - params.s + t)
    return min(l * step % q for step in _orbit_step_table(params, t))


def _require_nonabelian(params: GroupParams) -> None:
    if params.abelian or params.s == 0:
        raise ValidationError(
            "abelian parameters have no induced orbits; use the abelian closed form"
        )


def orbit_decomposition(params: GroupParams) -> list[OrbitDescriptor]:
    """All orbits of the b-action on Irr(<a>), duplicate-free.

    p^(n-s) singletons, then for each t = 1..s exactly phi(p^(n-s)) orbits
    of size p^t; the sizes are re-counted and must tile Irr(<a>).
    """
    _require_nonabelian(params)
    p, n, s = params.p, params.n, params.s
    orbits: list[OrbitDescriptor] = [LinearOrbit(lam) for lam in range(p ** (n - s))]
    total = p ** (n - s)
    for t in range(1, s + 1):
        q = p ** (n - s + t)
        labels = sorted({
            canonical_orbit_label(params, t, l)
            for l in range(1, q)
            if l % p != 0
        })
        if len(labels) != phi_pk(p, n - s):
            raise InternalInconsistencyError(
                f"orbit count at t={t}: {len(labels)} != phi(p^(n-s))"
            )
        orbits.extend(InducedOrbit(t, l) for l in labels)
        total += len(labels) * p ** t
    if total != p ** n:
        raise InternalInconsistencyError("orbit sizes do not tile Irr(<a>)")
    return orbits


def orbit_members(params: GroupParams, orbit: OrbitDescriptor) -> list[int]:
    """The chi-indices k (characters chi_k of <a>) making up the orbit."""
    if isinstance(orbit, LinearOrbit):
        return [orbit.lam * params.p ** params.s]
    q = params.p ** params.n
    shift = params.p ** (params.s - orbit.t)
    return [orbit.l * step * shift % q for step in _orbit_step_table(params, orbit.t)]


def enumerate_irreducibles(params: GroupParams) -> list[IrreducibleCharacter]:
    """The complete duplicate-free list of irreducible complex characters.

    p^(n+m-s) linear characters plus phi(p^(n-s)) p^(m-t) characters of
    degree p^t for each t = 1..s; the count and the degree-square identity
    sum(deg^2) = |G| are enforced before returning.
    """
    _require_nonabelian(params)
    p, n, m, s = params.p, params.n, params.m, params.s
    chars = [
        IrreducibleCharacter(LinearOrbit(lam), u, 1)
        for lam in range(p ** (n - s))
        for u in range(p ** m)
    ]
    for orbit in orbit_decomposition(params):
        if isinstance(orbit, LinearOrbit):
            continue
        deg = p ** orbit.t
        chars.extend(
            IrreducibleCharacter(orbit, u, deg)
            for u in range(p ** (m - orbit.t))
        )
    expected_total = p ** (n + m - s) + p ** (n + m - s - 1) - p ** (n + m - 2 * s - 1)
    if len(chars) != expected_total:
        raise InternalInconsistencyError(
            f"character count {len(chars)} != {expected_total}"
        )
    if sum(ch.degree ** 2 for ch in chars) != params.order:
        raise InternalInconsistencyError("sum of degree^2 != |G|")
    return chars


def character_value(
    ch: IrreducibleCharacter, g: GroupElement, params: GroupParams
) -> CyclotomicElement:
    """Exact value of the character at a^i b^j.

    Linear: zeta_{p^n}^(lam p^s i) * zeta_{p^m}^(u j). Induced of degree
    p^t: p^t * omega^(j/p^t) * zeta_{p^n}^(i l p^(s-t)) when p^t divides
    both i and j, else 0.
    """
    p, n, m, s = params.p, params.n, params.m, params.s
    if isinstance(ch.orbit, LinearOrbit):
        za = root_power(p, n, ch.orbit.lam * p ** s * g.i)
        zb = root_power(p, m, ch.u * g.j)
        return za * zb
    t, l = ch.orbit.t, ch.orbit.l
    d = p ** t
    if g.i % d or g.j % d:
        return CyclotomicElement.rational(p, 0)
    omega = root_power(p, m - t, ch.u * (g.j // d))
    za = root_power(p, n, g.i * l * p ** (s - t))
    return d * omega * za


def materialize_matrices(ch: IrreducibleCharacter, params: GroupParams):
    """Explicit matrices for the images of a and b (test-only facility).

    Linear: 1x1. Induced of degree d = p^t: a maps to the diagonal matrix
    with entries zeta^(r^c l p^(s-t)) ordered by ascending conjugating power
    c, and b to the cyclic shift with omega = zeta_{p^(m-t)}^u in the
    bottom-left corner. The matrices satisfy all three presentation
    relations exactly, and traces reproduce `character_value`.
    """
    p, n, m, s = params.p, params.n, params.m, params.s
    if isinstance(ch.orbit, LinearOrbit):
        a_img = [[root_power(p, n, ch.orbit.lam * p ** s)]]
        b_img = [[root_power(p, m, ch.u)]]
        return a_img, b_img
    t, l = ch.orbit.t, ch.orbit.l
    d = p ** t
    zero = CyclotomicElement.rational(p, 0)
    steps = _orbit_step_table(params, t)  # r^c mod p^(n-s+t)
    shift = p ** (s - t)
    a_img = [
        [
            root_power(p, n, steps[c] * l * shift) if c == c2 else zero
            for c2 in range(d)
        ]
        for c in range(d)
    ]
    one = CyclotomicElement.rational(p, 1)
    b_img = [[zero] * d for _ in range(d)]
    for c in range(d - 1):
        b_img[c][c + 1] = one
    b_img[d - 1][0] = root_power(p, m - t, ch.u)
    return a_img, b_img
