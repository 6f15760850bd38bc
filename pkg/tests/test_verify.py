import random
from fractions import Fraction

import pytest

from metacyclic.complex_reps import character_value, enumerate_irreducibles
from metacyclic.cyclotomic import CyclotomicElement, galois_apply
from metacyclic.errors import SizeBoundError
from metacyclic.group import GroupElement, from_s, validate
from metacyclic.rational import SimpleComponent, WedderburnDecomposition
from metacyclic.verify import (
    DeepChecker,
    ambient_level,
    cross_validate,
    decomposition_via_oracle,
    diff_components,
    monomial_exponent,
    valid_parameter_sets,
)


def test_valid_parameter_sets_grid():
    sets = list(valid_parameter_sets(3, 243))
    assert [(q.n, q.m, q.s) for q in sets] == [
        (2, 1, 1), (2, 2, 1), (3, 1, 1),
        (2, 3, 1), (3, 2, 1), (3, 2, 2), (4, 1, 1),
    ]
    assert all(q.r == 1 + q.p ** (q.n - q.s) for q in sets)


def test_cross_validate_matches_everywhere_small():
    for params in valid_parameter_sets(3, 729):
        result = cross_validate(params)
        assert result.match, result.diff


def test_diff_reports_changes():
    a = WedderburnDecomposition(3, (SimpleComponent(1, 0, 1), SimpleComponent(3, 1, 2)))
    b = WedderburnDecomposition(3, (SimpleComponent(1, 0, 1), SimpleComponent(3, 1, 3)))
    assert diff_components(a, a) == []
    assert diff_components(a, b) == ["q=3 lambda=1: closed=2 oracle=3"]


def test_oracle_bound_enforced():
    with pytest.raises(SizeBoundError):
        decomposition_via_oracle(from_s(3, 6, 4, 1))


def test_abelian_oracle_route():
    params = validate(3, 2, 2, 1, abelian=True)
    result = cross_validate(params)
    assert result.match
    assert result.closed.as_multiset() == {(1, 0): 1, (1, 1): 4, (1, 2): 12}


def test_monomial_exponent_against_character_value():
    params = validate(3, 2, 3, 4)
    level = ambient_level(params)
    rng = random.Random(42)
    chars = enumerate_irreducibles(params)
    from metacyclic.cyclotomic import root_power

    for _ in range(80):
        ch = rng.choice(chars)
        g = GroupElement(rng.randrange(9), rng.randrange(27))
        exponent = monomial_exponent(ch, g.i, g.j, params)
        slow = character_value(ch, g, params)
        if exponent is None:
            assert slow == 0
        else:
            assert slow == ch.degree * root_power(params.p, level, exponent)


def test_orthogonality_slow_route_sample():
    # independent CyclotomicElement computation of a few inner products
    params = validate(3, 2, 1, 4)
    chars = enumerate_irreducibles(params)
    rng = random.Random(2)
    for _ in range(12):
        x, y = rng.choice(chars), rng.choice(chars)
        total = CyclotomicElement.rational(3, 0)
        for i in range(9):
            for j in range(3):
                g = GroupElement(i, j)
                value = character_value(x, g, params)
                conj = galois_apply(character_value(y, g, params), -1)
                total = total + value * conj
        scaled = total * Fraction(1, params.order)
        assert scaled == (1 if x == y else 0)


def test_deep_checker_full_suite():
    for params in (validate(3, 2, 2, 4), validate(5, 2, 1, 6)):
        checker = DeepChecker(params, rng=random.Random(0))
        results = checker.run_all()
        assert all(res.ok for res in results), [
            (res.name, res.detail) for res in results if not res.ok
        ]
        names = {res.name for res in results}
        assert {
            "counts", "class_functions", "orthogonality", "galois_action",
            "matrix_relations", "value_agreement", "rational_counts",
            "decomposition",
        } <= names


def test_orthogonality_detects_corruption():
    # feed the checker a wrong table and make sure the pair sum notices
    params = validate(3, 2, 1, 4)
    checker = DeepChecker(params, rng=random.Random(0))
    assert checker._pair_orthogonal(3, 4)
    table = list(checker.table(3))
    table[5] = (table[5] + 1) % 9  # poison one value
    checker._tables[3] = table
    assert not checker._pair_orthogonal(3, 4)


def test_matrix_relation_check_is_not_vacuous():
    params = validate(3, 3, 2, 4)
    checker = DeepChecker(params, rng=random.Random(0))
    assert checker.check_matrix_relations().ok
    # a poisoned character table must break the trace comparison
    from metacyclic.verify import monomial_generators

    ch = next(c for c in checker.chars if c.degree == 3)
    a_mat, b_mat = monomial_generators(ch, params)
    bad = b_mat.__class__(b_mat.modulus, b_mat.perm,
                          tuple((e + 1) % b_mat.modulus for e in b_mat.exps))
    assert not checker._traces_match(ch, a_mat, bad)
