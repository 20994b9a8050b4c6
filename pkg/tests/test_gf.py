"""Field construction and element arithmetic."""

import numpy as np
import pytest

from ppinv.gf import Field, FieldElement, first_irreducible, is_prime, prime_factors


def test_pinned_moduli():
    assert Field(3, 1, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert Field(5, 1, 2).modulus == (2, 0, 1)  # x^2 + 2
    assert Field(2, 1, 1).modulus == (0, 1)     # x


@pytest.mark.parametrize("spec", [(2, 1, 4), (3, 2, 1), (7, 1, 2), (2, 2, 3), (13, 1, 1)])
def test_build_deterministic(spec):
    assert Field(*spec).modulus == Field(*spec).modulus


def test_same_degree_same_modulus_across_splits():
    # F_64 as q=2,n=6 / q=4,n=3 / q=8,n=2 share the underlying field
    mods = {Field(2, e, 6 // e).modulus for e in (1, 2, 3)}
    assert len(mods) == 1


def test_build_errors():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(1)
    with pytest.raises(ValueError):
        Field(5, 0, 1)
    with pytest.raises(ValueError):
        Field(5, 1, 0)
    with pytest.raises(ValueError):
        Field(2, 1, 33)  # 2^33 over the default bound
    Field(2, 1, 5, max_order=32)
    with pytest.raises(ValueError):
        Field(2, 1, 6, max_order=32)


def test_first_irreducible_is_irreducible_by_brute_force():
    # no roots for degree 2/3 candidates over small primes
    for p, deg in [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (3, 3)]:
        mod = first_irreducible(p, deg)
        assert len(mod) == deg + 1 and mod[-1] == 1
        for r in range(p):
            val = sum(c * pow(r, k, p) for k, c in enumerate(mod)) % p
            assert val != 0, (p, deg, r)


def test_primality_helpers():
    assert [n for n in range(60) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert prime_factors(728) == [2, 7, 13]
    assert prime_factors(1) == []


def test_arith_pinned_f9():
    F9 = Field(3, 1, 2)
    i = F9.from_coeffs([0, 1])
    one = F9.one
    a = one + i
    assert (a * (one - i)).index == 2
    assert a.inverse() == F9.from_coeffs([2, 1])
    assert a + F9.zero == a
    assert (a * a.inverse()) == one


def test_pow_pinned():
    F5 = Field(5)
    assert (F5(2) ** 2).index == 4
    F9 = Field(3, 1, 2)
    a = F9.from_coeffs([1, 1])
    assert (a ** 4).index == 2
    assert (F9.zero ** 0) == F9.one
    assert (a ** 0) == F9.one
    with pytest.raises(ValueError):
        a ** -1


def test_inverse_of_zero_is_reported():
    F7 = Field(7)
    with pytest.raises(ZeroDivisionError):
        F7.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        F7.one / F7.zero


@pytest.mark.parametrize("spec", [(2, 1, 3), (3, 1, 2), (5, 1, 1)])
def test_field_axioms_exhaustive(spec):
    F = Field(*spec)
    elems = list(F.elements())
    for a in elems:
        assert a + F.zero == a
        assert a * F.one == a
        if a:
            assert a * a.inverse() == F.one
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            assert a - b == -(b - a)
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("spec", [(2, 1, 4), (3, 1, 3), (5, 1, 2), (2, 2, 2)])
def test_lagrange_power_laws(spec):
    F = Field(*spec)
    Q = F.order
    for a in F.elements():
        assert a ** Q == a
        if a:
            assert a ** (Q - 1) == F.one


def test_norm_pinned_and_properties():
    F9 = Field(3, 1, 2)
    a = F9.from_coeffs([1, 1])
    assert F9.norm(a, 1).index == 2
    assert F9.norm(F9.one, 1) == F9.one
    assert F9.norm(F9.zero, 1) == F9.zero
    for x in F9.elements():
        assert F9.norm(x, 2) == x  # d = n: identity exponent
    # multiplicativity and subfield membership on F_16 over F_4 (e=1, n=4, d=2)
    F16 = Field(2, 1, 4)
    sub_order = F16.q ** 2
    for x in F16.elements():
        nx = F16.norm(x, 2)
        if x:
            assert nx ** (sub_order - 1) == F16.one
        for y in F16.elements():
            assert F16.norm(x * y, 2) == F16.norm(x, 2) * F16.norm(y, 2)
    with pytest.raises(ValueError):
        F16.norm(F16.one, 3)


def test_enumeration_and_index_round_trip():
    F9 = Field(3, 1, 2)
    assert F9(4) == F9.from_coeffs([1, 1])  # 4 = 1 + 1*3
    assert F9(0) == F9.zero
    seen = [e.index for e in F9.elements()]
    assert seen == list(range(9))
    for k in range(9):
        assert F9(F9(k).index).index == k
        assert F9.from_coeffs(F9(k).coeffs) == F9(k)
    with pytest.raises(ValueError):
        F9(9)
    with pytest.raises(ValueError):
        F9(-1)
    with pytest.raises(ValueError):
        F9.from_coeffs([3, 0])
    assert len(list(F9.units())) == 8


def test_descriptor_round_trip():
    F = Field.from_descriptor("5^1^2")
    assert (F.p, F.e, F.n) == (5, 1, 2)
    assert F.descriptor() == "5^1^2"
    assert Field.from_descriptor(F.descriptor()) == F
    for bad in ("5^1", "5", "a^b^c", "5^1^2^3"):
        with pytest.raises(ValueError):
            Field.from_descriptor(bad)


def test_mixed_field_operands_rejected():
    a = Field(5)(2)
    b = Field(7)(2)
    with pytest.raises(TypeError):
        a + b
    with pytest.raises(TypeError):
        a * b


@pytest.mark.parametrize("spec", [(2, 1, 3), (3, 1, 2), (5, 1, 2), (2, 2, 2)])
def test_tables_match_scalar_ops(spec):
    F = Field(*spec)
    pure = Field(*spec)  # untouched twin: no dense tables, pure polynomial path
    T = F.tables
    Q = F.order
    for i in range(Q):
        assert T.neg[i] == pure._neg_idx(i)
        assert T.frob[i] == pure._pow_idx(i, F.p)
        if i:
            assert T.inv[i] == pure._inv_idx(i)
        for j in range(Q):
            assert T.add(np.int64(i), np.int64(j)) == pure._add_idx(i, j)
            assert T.mul(np.int64(i), np.int64(j)) == pure._mul_idx(i, j)
        for k in (0, 1, 2, 3, Q - 1, Q, 2 * Q + 1):
            assert T.pow(np.int64(i), k) == pure._pow_idx(i, k)


def test_tables_guard():
    with pytest.raises(ValueError):
        Field(2, 1, 21).tables  # 2^21 beyond the dense-table limit

    F = Field(3, 1, 2)
    with pytest.raises(ZeroDivisionError):
        F.tables.inv_of(np.array([0, 1]))
