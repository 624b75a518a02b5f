import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bsgs.errors import DivisionByZero, FieldTooLarge, NonPrimeCharacteristic
from bsgs.gf import field_from_order, is_irreducible, least_irreducible, make_field

from helpers import ref_add, ref_mul

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)]


def test_prime_field_basics():
    F = make_field(2)
    assert F.add(1, 1) == 0
    assert make_field(5).inv(2) == 3


def test_gf4_polynomial_and_product():
    F = make_field(2, 2)
    assert F.poly == (1, 1, 1)
    assert F.mul(2, 2) == 3


def test_gf9_polynomial():
    assert make_field(3, 2).poly == (1, 0, 1)


def _divides(f, g, p):
    """True when monic f divides g over GF(p); ascending coefficients."""
    g = list(g)
    while len(g) >= len(f):
        c = g[-1]
        shift = len(g) - len(f)
        for i, x in enumerate(f):
            g[shift + i] = (g[shift + i] - c * x) % p
        g.pop()
    return not any(g)


def _reducible(poly, p):
    r = len(poly) - 1
    for k in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if _divides(list(low) + [1], poly, p):
                return True
    return False


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3), (2, 6)])
def test_least_irreducible_is_least(p, r):
    # first irreducible in ascending-coefficient lexicographic order
    for low in itertools.product(range(p), repeat=r):
        cand = tuple(low) + (1,)
        if not _reducible(cand, p):
            break
    assert least_irreducible(p, r) == cand
    assert is_irreducible(cand, p)


@pytest.mark.parametrize("p,r", SMALL)
def test_tables_match_reference(p, r):
    F = make_field(p, r)
    for a in range(F.q):
        for b in range(F.q):
            assert F.add(a, b) == ref_add(a, b, p, r)
            assert F.mul(a, b) == ref_mul(a, b, p, r, F.poly)


@pytest.mark.parametrize("p,r", SMALL + [(7, 1), (2, 8), (3, 5)])
def test_inverses_and_group_order(p, r):
    F = make_field(p, r)
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
        assert F.add(a, F.neg(a)) == 0
    assert F.order(F.primitive_element) == F.q - 1


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**9 - 1), st.integers(0, 2**9 - 1), st.integers(0, 2**9 - 1))
def test_log_table_field_axioms(a, b, c):
    # q = 512 is above the full-table threshold
    F = make_field(2, 9)
    assert not F.has_full_tables
    assert F.mul(a, b) == ref_mul(a, b, 2, 9, F.poly)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(6)
    with pytest.raises(FieldTooLarge):
        make_field(2, 17)
    with pytest.raises(DivisionByZero):
        make_field(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        make_field(2, 2).div(1, 0)
    with pytest.raises(NonPrimeCharacteristic):
        field_from_order(12)


def test_fields_are_cached():
    assert make_field(3, 2) is field_from_order(9)
