from __future__ import annotations

import itertools

import numpy as np
import pytest

from vsrep.field import (
    GF,
    MODULUS_TABLE,
    FieldElem,
    FieldMismatchError,
    ff_add,
    ff_frobenius,
    ff_inv,
    ff_mul,
    field_from_order,
    field_from_spec,
    is_irreducible_over_prime_field,
    least_irreducible,
)

from oracles import naive_add, naive_mul

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def el(q, code):
    return field_from_order(q).element(code)


def test_gf2_add():
    assert ff_add(el(2, 1), el(2, 1)) == el(2, 0)


def test_gf4_add():
    assert ff_add(el(4, 2), el(4, 3)) == el(4, 1)


def test_gf9_add_matches_coefficientwise_oracle():
    F = GF(3, 2)
    assert ff_add(F.element(4), F.element(5)).code == 6
    for a, b in itertools.product(range(9), repeat=2):
        assert ff_add(F.element(a), F.element(b)).code == naive_add(a, b, 3, 2)


def test_mul_examples():
    for q in SMALL_ORDERS:
        for a in range(q):
            assert ff_mul(el(q, a), el(q, 1)) == el(q, a)
    assert ff_mul(el(4, 2), el(4, 2)).code == 3
    assert ff_mul(el(8, 4), el(8, 2)).code == 3


def test_inv_examples():
    assert ff_inv(el(4, 1)).code == 1
    assert ff_inv(el(4, 2)).code == 3
    assert ff_inv(el(5, 2)).code == 3
    with pytest.raises(ZeroDivisionError):
        ff_inv(el(5, 0))


def test_frobenius_examples():
    for a in range(4):
        assert ff_frobenius(el(4, a), 0).code == a
    assert ff_frobenius(el(4, 2), 1).code == 3
    assert ff_frobenius(el(2, 1), 0).code == 1
    with pytest.raises(ValueError):
        ff_frobenius(el(4, 2), 2)


def test_mismatched_fields_rejected():
    with pytest.raises(FieldMismatchError):
        ff_add(el(4, 1), el(2, 1))
    with pytest.raises(FieldMismatchError):
        ff_mul(el(9, 1), el(3, 1))


def test_modulus_table_is_shipped_and_irreducible():
    expected = {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (3, 2): (1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
        (5, 2): (2, 0, 1),
        (3, 3): (1, 2, 0, 1),
    }
    for (p, e), coeffs in expected.items():
        assert tuple(GF(p, e).modulus) == coeffs
        assert is_irreducible_over_prime_field(coeffs, p)
    assert set(MODULUS_TABLE) >= set(expected)


def test_least_irreducible_reproduces_table():
    for (p, e), coeffs in MODULUS_TABLE.items():
        assert least_irreducible(p, e) == tuple(coeffs)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_tables_match_polynomial_oracle(q):
    F = field_from_order(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert int(F.add_table[a, b]) == naive_add(a, b, F.p, F.e)
        assert int(F.mul_table[a, b]) == naive_mul(a, b, F.p, F.modulus)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_from_order(q)
    a = np.arange(q, dtype=np.uint8)
    x, y, z = np.meshgrid(a, a, a, indexing="ij")
    assert np.array_equal(F.add(F.add(x, y), z), F.add(x, F.add(y, z)))
    assert np.array_equal(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)))
    assert np.array_equal(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)))
    assert np.array_equal(F.add(a, F.neg(a)), np.zeros(q, dtype=np.uint8))
    assert np.array_equal(F.mul(a[1:], F.inv(a[1:])), np.ones(q - 1, dtype=np.uint8))


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_frobenius_is_automorphism_fixing_prime_field(q):
    F = field_from_order(q)
    a = np.arange(q, dtype=np.uint8)
    x, y = np.meshgrid(a, a, indexing="ij")
    fr = lambda v: F.frobenius(v, 1)
    assert np.array_equal(fr(F.add(x, y)), F.add(fr(x), fr(y)))
    assert np.array_equal(fr(F.mul(x, y)), F.mul(fr(x), fr(y)))
    fixed = [c for c in range(q) if F.frobenius(c, 1) == c]
    assert fixed == list(range(F.p))
    v = a
    for _ in range(F.e):
        v = fr(v)
    assert np.array_equal(v, a)


def test_spec_round_trip_and_bounds():
    F = field_from_spec({"p": 3, "e": 2})
    assert F == GF(3, 2) and F.spec == {"p": 3, "e": 2}
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(2, 9)
    with pytest.raises(ValueError):
        FieldElem(GF(4), 4)


def test_primitive_elements():
    assert GF(3, 2).primitive_element == 4
    assert GF(2, 2).primitive_element == 2
    for q in SMALL_ORDERS:
        F = field_from_order(q)
        assert F.multiplicative_order(F.primitive_element) == q - 1
