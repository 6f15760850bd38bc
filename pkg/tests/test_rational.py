import random

import pytest

from metacyclic.complex_reps import (
    IrreducibleCharacter,
    LinearOrbit,
    character_value,
    enumerate_irreducibles,
)
from metacyclic.cyclotomic import galois_apply
from metacyclic.errors import ValidationError
from metacyclic.group import GroupElement, validate
from metacyclic.rational import (
    character_field_level,
    galois_classes,
    rational_counts_from_classes,
    sigma_on_character,
    wedderburn_from_classes,
)

G1 = validate(3, 4, 2, 10)
G2 = validate(3, 3, 3, 4)
G3 = validate(3, 2, 3, 4)

# frozen component multisets {(matrix_size, center_level): multiplicity}
G1_COMPONENTS = {(1, 0): 1, (1, 1): 4, (1, 2): 12, (3, 2): 3, (9, 2): 1}
G2_COMPONENTS = {(1, 0): 1, (1, 1): 4, (1, 2): 3, (1, 3): 3,
                 (3, 1): 3, (3, 2): 2, (9, 1): 3}
G3_COMPONENTS = {(1, 0): 1, (1, 1): 4, (1, 2): 3, (1, 3): 3,
                 (3, 1): 3, (3, 2): 2}


def oracle_decomposition(params):
    return wedderburn_from_classes(
        galois_classes(enumerate_irreducibles(params), params), params
    )


def test_character_field_levels():
    trivial = IrreducibleCharacter(LinearOrbit(0), 0, 1)
    assert character_field_level(trivial, G1) == 0
    # G1 induced t=1 with omega of order 3 (= p^1 <= p^(n-s)): field Q(zeta_9)
    ch = next(
        c for c in enumerate_irreducibles(G1) if c.degree == 3 and c.u == 1
    )
    assert character_field_level(ch, G1) == 2
    # G3 induced t=1 with omega of order 9 > p^(n-s): field Q(zeta_9)
    ch = next(
        c for c in enumerate_irreducibles(G3) if c.degree == 3 and c.u % 3 == 1
    )
    assert character_field_level(ch, G3) == 2


def test_field_level_matches_value_minimal_level():
    from metacyclic.cyclotomic import minimal_level

    params = validate(3, 2, 2, 4)
    qa, qb = 9, 9
    for ch in enumerate_irreducibles(params):
        observed = 0
        for i in range(qa):
            for j in range(qb):
                value = character_value(ch, GroupElement(i, j), params)
                observed = max(observed, minimal_level(value))
        assert observed == character_field_level(ch, params)


def test_galois_class_structure_g1():
    chars = enumerate_irreducibles(G1)
    classes = galois_classes(chars, G1)
    # t = 1: 18 characters of degree 3 in 3 classes of size phi(9) = 6
    deg3 = [cls for cls in classes if cls.representative.degree == 3]
    assert len(deg3) == 3
    assert all(cls.size == 6 for cls in deg3)
    # identity automorphism fixes every member
    for cls in classes[:5]:
        for member in cls.members:
            assert sigma_on_character(member, 1, G1) == member
    # partition
    assert sum(cls.size for cls in classes) == len(chars)
    assert len(classes) == 21


def test_galois_classes_reject_incomplete_input():
    chars = enumerate_irreducibles(G3)
    with pytest.raises(ValidationError):
        galois_classes(chars[:-1], G3)


def test_class_sizes_match_field_degree():
    for params in (G3, validate(3, 2, 2, 4), validate(5, 2, 1, 6)):
        for cls in galois_classes(enumerate_irreducibles(params), params):
            phi = 1 if cls.field_level == 0 else (
                params.p ** cls.field_level - params.p ** (cls.field_level - 1)
            )
            assert cls.size == phi
            for member in cls.members:
                assert character_field_level(member, params) == cls.field_level


def test_parameter_action_matches_value_action_small():
    # character_value + galois_apply route, element by element
    params = validate(3, 2, 1, 4)
    chars = enumerate_irreducibles(params)
    units = [a for a in range(1, 9) if a % 3]
    for ch in chars:
        for alpha in units:
            image = sigma_on_character(ch, alpha, params)
            assert image in set(chars)
            for i in range(9):
                for j in range(3):
                    g = GroupElement(i, j)
                    lhs = galois_apply(character_value(ch, g, params), alpha)
                    assert lhs == character_value(image, g, params)


def test_oracle_decompositions_match_frozen_goldens():
    assert oracle_decomposition(G1).as_multiset() == G1_COMPONENTS
    assert oracle_decomposition(G2).as_multiset() == G2_COMPONENTS
    assert oracle_decomposition(G3).as_multiset() == G3_COMPONENTS


def test_dimension_identity():
    for params in (G1, G2, G3):
        assert oracle_decomposition(params).dimension() == params.order


def test_rational_counts_from_classes():
    classes = galois_classes(enumerate_irreducibles(G1), G1)
    counts = rational_counts_from_classes(classes, G1)
    # top degree 9 * phi(9) = 54 occurs once
    assert counts == {1: 1, 2: 4, 6: 12, 18: 3, 54: 1}
    classes = galois_classes(enumerate_irreducibles(G3), G3)
    assert rational_counts_from_classes(classes, G3) == {1: 1, 2: 4, 6: 6, 18: 5}


def test_nonlinear_class_counts_follow_the_two_cases():
    # for each degree p^t: if n-s >= m-t there are p^(m-t) classes, all with
    # field level n-s; otherwise p^(n-s) classes at level n-s plus
    # phi(p^(n-s)) classes at each level n-s < L <= m-t
    from metacyclic.arith import phi_pk
    from metacyclic.group import from_s

    sets = [G1, G2, G3, validate(3, 2, 2, 4), validate(5, 3, 2, 26),
            from_s(3, 2, 5, 1), from_s(3, 4, 3, 3)]
    for params in sets:
        p, n, m, s = params.p, params.n, params.m, params.s
        classes = galois_classes(enumerate_irreducibles(params), params)
        for t in range(1, s + 1):
            histogram = {}
            for cls in classes:
                if cls.representative.degree == p ** t and not isinstance(
                    cls.representative.orbit, LinearOrbit
                ):
                    histogram[cls.field_level] = histogram.get(cls.field_level, 0) + 1
            if n - s >= m - t:
                expected = {n - s: p ** (m - t)}
            else:
                expected = {n - s: p ** (n - s)}
                for level in range(n - s + 1, m - t + 1):
                    expected[level] = phi_pk(p, n - s)
            assert histogram == expected, (params, t, histogram, expected)


def test_class_members_share_values_up_to_galois():
    rng = random.Random(11)
    params = G3
    classes = galois_classes(enumerate_irreducibles(params), params)
    cls = next(c for c in classes if c.size == 6 and c.representative.degree == 3)
    rep = cls.representative
    for member in cls.members:
        # some unit alpha carries rep's values to member's values
        found = False
        for alpha in (a for a in range(1, 27) if a % 3):
            if sigma_on_character(rep, alpha, params) == member:
                found = True
                for _ in range(10):
                    g = GroupElement(rng.randrange(9), rng.randrange(27))
                    assert galois_apply(
                        character_value(rep, g, params), alpha
                    ) == character_value(member, g, params)
                break
        assert found
