import random

import pytest

from metacyclic.complex_reps import (
    InducedOrbit,
    LinearOrbit,
    character_value,
    enumerate_irreducibles,
    materialize_matrices,
    orbit_decomposition,
    orbit_members,
)
from metacyclic.cyclotomic import CyclotomicElement, root_power
from metacyclic.errors import ValidationError
from metacyclic.group import GroupElement, validate


def degree_histogram(chars):
    out = {}
    for ch in chars:
        out[ch.degree] = out.get(ch.degree, 0) + 1
    return out


def brute_force_orbits(params):
    """Orbits of k -> r k on Z/p^n, computed directly from the action."""
    q = params.p ** params.n
    seen = [False] * q
    orbits = []
    for k in range(q):
        if seen[k]:
            continue
        orbit = []
        x = k
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * params.r % q
        orbits.append(frozenset(orbit))
    return set(orbits)


def test_orbit_decomposition_counts():
    params = validate(3, 4, 2, 10)
    orbits = orbit_decomposition(params)
    linear = [o for o in orbits if isinstance(o, LinearOrbit)]
    by_t = {}
    for o in orbits:
        if isinstance(o, InducedOrbit):
            by_t[o.t] = by_t.get(o.t, 0) + 1
    assert len(linear) == 9
    assert by_t == {1: 6, 2: 6}
    assert 9 + 6 * 3 + 6 * 9 == 81  # orbit sizes tile Irr(<a>)

    small = validate(3, 2, 1, 4)
    orbits = orbit_decomposition(small)
    assert sum(isinstance(o, LinearOrbit) for o in orbits) == 3
    assert sum(isinstance(o, InducedOrbit) for o in orbits) == 2


def test_orbits_match_direct_action():
    for params in (validate(3, 4, 2, 10), validate(3, 2, 1, 4), validate(5, 3, 2, 26)):
        direct = brute_force_orbits(params)
        rebuilt = {frozenset(orbit_members(params, o)) for o in orbit_decomposition(params)}
        assert rebuilt == direct


def test_orbit_decomposition_rejects_abelian():
    with pytest.raises(ValidationError):
        orbit_decomposition(validate(3, 2, 1, 1, abelian=True))


def test_enumerate_counts():
    g1 = enumerate_irreducibles(validate(3, 4, 2, 10))
    assert degree_histogram(g1) == {1: 81, 3: 18, 9: 6}
    assert len(g1) == 105
    g2 = enumerate_irreducibles(validate(3, 3, 3, 4))
    assert degree_histogram(g2) == {1: 81, 3: 18, 9: 6}
    assert len(g2) == 105  # = 3^4 + 3^3 - 3
    for chars, order in ((g1, 729), (g2, 729)):
        assert sum(ch.degree ** 2 for ch in chars) == order


def test_enumeration_is_duplicate_free():
    chars = enumerate_irreducibles(validate(3, 2, 3, 4))
    assert len(set(chars)) == len(chars) == 99


def test_character_value_examples():
    params = validate(3, 2, 3, 4)
    nonlinear = [ch for ch in enumerate_irreducibles(params) if ch.degree == 3]
    a = GroupElement(1, 0)
    for ch in nonlinear:
        assert character_value(ch, GroupElement(0, 0), params) == 3
        assert character_value(ch, a, params) == 0
        # psi(a^(p^t)) = p^t * zeta^(l p^s)
        t, l = ch.orbit.t, ch.orbit.l
        expected = (3 ** t) * root_power(3, 2, l * 3 ** params.s)
        assert character_value(ch, GroupElement(3 ** t, 0), params) == expected


def test_linear_character_values():
    params = validate(3, 2, 3, 4)
    linear = [ch for ch in enumerate_irreducibles(params) if ch.degree == 1]
    rng = random.Random(3)
    for ch in rng.sample(linear, 10):
        lam, u = ch.orbit.lam, ch.u
        for _ in range(5):
            i, j = rng.randrange(9), rng.randrange(27)
            expected = root_power(3, 2, lam * 3 * i) * root_power(3, 3, u * j)
            assert character_value(ch, GroupElement(i, j), params) == expected


def dense_matmul(x, y, p):
    d = len(x)
    zero = CyclotomicElement.rational(p, 0)
    out = [[zero] * d for _ in range(d)]
    for i in range(d):
        for k in range(d):
            if x[i][k] == 0:
                continue
            for j in range(d):
                if y[k][j] == 0:
                    continue
                out[i][j] = out[i][j] + x[i][k] * y[k][j]
    return out


def dense_pow(mat, e, p):
    d = len(mat)
    out = [
        [CyclotomicElement.rational(p, 1 if i == j else 0) for j in range(d)]
        for i in range(d)
    ]
    base = mat
    while e:
        if e & 1:
            out = dense_matmul(out, base, p)
        base = dense_matmul(base, base, p)
        e >>= 1
    return out


def trace(mat, p):
    total = CyclotomicElement.rational(p, 0)
    for i in range(len(mat)):
        total = total + mat[i][i]
    return total


def test_materialized_matrices_satisfy_relations():
    params = validate(3, 2, 1, 4)
    chars = enumerate_irreducibles(params)
    ident = [
        [CyclotomicElement.rational(3, 1 if i == j else 0) for j in range(3)]
        for i in range(3)
    ]
    for ch in chars:
        a_img, b_img = materialize_matrices(ch, params)
        if ch.degree == 1:
            assert a_img[0][0] ** 9 == 1 and b_img[0][0] ** 3 == 1
            continue
        assert dense_pow(a_img, 9, 3) == ident
        assert dense_pow(b_img, 3, 3) == ident
        # B A = A^r B
        assert dense_matmul(b_img, a_img, 3) == dense_matmul(
            dense_pow(a_img, params.r, 3), b_img, 3
        )


def test_matrix_traces_reproduce_character_values():
    params = validate(3, 2, 1, 4)
    nonlinear = [ch for ch in enumerate_irreducibles(params) if ch.degree == 3]
    for ch in nonlinear:
        a_img, b_img = materialize_matrices(ch, params)
        for i in range(9):
            for j in range(3):
                mat = dense_matmul(dense_pow(a_img, i, 3), dense_pow(b_img, j, 3), 3)
                assert trace(mat, 3) == character_value(ch, GroupElement(i, j), params)


def test_b_power_is_omega_identity():
    # B^(p^t) = omega * I for an induced character of degree p^t
    params = validate(3, 3, 3, 4)
    sample = next(
        ch for ch in enumerate_irreducibles(params)
        if ch.degree == 3 and ch.u == 1
    )
    _, b_img = materialize_matrices(sample, params)
    cube = dense_pow(b_img, 3, 3)
    omega = root_power(3, 2, sample.u)  # omega = zeta_{p^(m-t)}^u
    for i in range(3):
        for j in range(3):
            assert cube[i][j] == (omega if i == j else 0)
