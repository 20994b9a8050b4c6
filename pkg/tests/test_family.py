"""Criterion, pointwise and symbolic inverses, linearized binomial, gcd identity."""

import math

import numpy as np
import pytest

from ppinv.family import (
    NotPermutationError,
    PPParams,
    gcd_halfpower,
    linearized_images,
    linearized_inverse,
    linearized_is_permutation,
    linearized_poly,
    norm_mask,
    poly_from_terms,
)
from ppinv.gf import Field
from ppinv.oracle import PermTable, inverse_poly_by_interpolation, tabulate
from ppinv.poly import Poly


def all_params(field, m):
    v = field.q ** m - 1
    return [PPParams(field, m, s, v // s) for s in range(1, v + 1) if v % s == 0]


def test_params_pinned():
    F49 = Field(7, 1, 2)
    prm = PPParams(F49, 1, 3, 2)
    assert (prm.d, prm.s_bar, prm.u) == (1, 3, 2)
    F25 = Field(5, 1, 2)
    prm2 = PPParams(F25, 1, 4, 1)
    assert (prm2.d, prm2.s_bar, prm2.u) == (1, 4, 1)


def test_params_errors():
    F25 = Field(5, 1, 2)
    with pytest.raises(ValueError):
        PPParams(F25, 1, 2, 3)  # 2*3 != 4
    with pytest.raises(ValueError):
        PPParams(F25, 3, 2, 2)  # m out of range
    with pytest.raises(ValueError):
        PPParams(F25, 0, 2, 2)
    with pytest.raises(ValueError):
        PPParams(F25, 1, 4, 0)


def test_params_divisibility_invariants():
    for spec in [(3, 1, 2), (5, 1, 2), (2, 1, 4), (2, 2, 2), (7, 1, 2)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                group = field.order - 1
                assert prm.d == math.gcd(m, field.n)
                assert group % prm.s_bar == 0
                assert prm.t % prm.u == 0
                for i in range(1, field.n // prm.d + 1):
                    assert (field.q ** ((i - 1) * m) - 1) % prm.t == 0


def test_is_pp_pinned():
    F5 = Field(5)
    prm = PPParams(F5, 1, 2, 2)
    assert prm.is_permutation(F5(2)) is True
    assert prm.is_permutation(F5(4)) is False
    assert prm.is_permutation(F5(1)) is False
    with pytest.raises(ValueError):
        prm.is_permutation(F5(0))


def test_eval_f_pinned():
    F5 = Field(5)
    prm = PPParams(F5, 1, 2, 2)
    assert prm.evaluate(F5(2), F5(2)).index == 3
    assert prm.evaluate(F5(2), F5(0)) == F5.zero
    F7 = Field(7)
    assert PPParams(F7, 1, 2, 3).evaluate(F7(3), F7(6)).index == 1


def test_inverse_value_pinned():
    F5 = Field(5)
    prm = PPParams(F5, 1, 2, 2)
    assert prm.inverse_value(F5(2), F5(3)).index == 2
    assert prm.inverse_value(F5(2), F5(0)) == F5.zero
    F7 = Field(7)
    assert PPParams(F7, 1, 3, 2).inverse_value(F7(2), F7(6)).index == 3


def test_inverse_rejected_for_non_pp():
    F5 = Field(5)
    prm = PPParams(F5, 1, 2, 2)
    with pytest.raises(NotPermutationError):
        prm.inverse_value(F5(4), F5(2))
    with pytest.raises(NotPermutationError):
        prm.closed_inverse(F5(1))
    with pytest.raises(NotPermutationError):
        prm.inverse_values(F5(4))


def test_criterion_matches_oracle_bijectivity():
    for spec in [(2, 1, 3), (3, 1, 2), (5, 1, 1), (7, 1, 1), (2, 2, 2), (3, 1, 3)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                for a in field.units():
                    table = tabulate(field, lambda x: prm.evaluate(a, x))
                    assert prm.is_permutation(a) == table.is_bijection(), (spec, prm, a)


def test_inverse_laws_small_sweep():
    for spec in [(3, 1, 2), (5, 1, 1), (7, 1, 1), (2, 2, 2)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                for a in field.units():
                    if not prm.is_permutation(a):
                        continue
                    for x in field.elements():
                        assert prm.inverse_value(a, prm.evaluate(a, x)) == x
                        assert prm.evaluate(a, prm.inverse_value(a, x)) == x


def test_closed_inverse_pinned():
    F5 = Field(5)
    prm = PPParams(F5, 1, 2, 2)
    ci = prm.closed_inverse(F5(2))
    assert ci.scale == F5.one
    assert ci.g == Poly(F5, [2, 0, 1])
    assert ci.h == Poly(F5, [3])
    assert ci.t == 2
    assert ci.as_poly() == Poly.monomial(F5, 3)


def test_closed_inverse_term_counts():
    for spec in [(3, 1, 2), (5, 1, 2), (7, 1, 2), (2, 2, 2)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                for a in field.units():
                    if not prm.is_permutation(a):
                        continue
                    ci = prm.closed_inverse(a)
                    assert len(ci.g_terms) == prm.u
                    assert len(ci.h_terms) == field.n // prm.d
                    nu = sum(field.q ** (prm.d * l) for l in range(field.n // prm.d))
                    assert [e for e, _ in ci.g_terms] == [nu * prm.s * l for l in range(prm.u)]


def test_closed_inverse_agrees_with_pointwise():
    for spec in [(3, 1, 2), (5, 1, 2), (7, 1, 1), (2, 1, 4)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                for a in field.units():
                    if not prm.is_permutation(a):
                        continue
                    ci = prm.closed_inverse(a)
                    for y in field.elements():
                        assert ci.evaluate(y) == prm.inverse_value(a, y)


def test_closed_inverse_poly_matches_interpolation():
    for spec in [(3, 1, 2), (5, 1, 1), (7, 1, 1), (3, 1, 3)]:
        field = Field(*spec)
        for m in range(1, field.n + 1):
            for prm in all_params(field, m):
                for a in field.units():
                    if not prm.is_permutation(a):
                        continue
                    table = tabulate(field, lambda x: prm.evaluate(a, x))
                    assert prm.inverse_polynomial(a) == inverse_poly_by_interpolation(table)


def test_vector_paths_match_scalar():
    field = Field(5, 1, 2)
    prm = PPParams(field, 2, 4, 6)
    imgs = prm.images_for()
    crit = prm.criterion_mask()
    for ai in range(1, 25):
        a = field(ai)
        assert crit[ai - 1] == prm.is_permutation(a)
        for xv in range(25):
            assert imgs[ai - 1, xv] == prm.evaluate(a, field(xv)).index
        if crit[ai - 1]:
            iv = prm.inverse_values(a)
            for yv in range(25):
                assert iv[yv] == prm.inverse_value(a, field(yv)).index


def test_poly_from_terms_folds_large_exponents():
    F9 = Field(3, 1, 2)
    # x^9 -> x, so (9, 1) and (1, 2) accumulate on the same slot
    p = poly_from_terms(F9, [(9, F9.one), (1, F9(2))])
    assert p == Poly.zero(F9)
    assert poly_from_terms(F9, [(0, F9(2)), (10, F9.one)]) == Poly(F9, [2, 0, 1])


# -- linearized binomial -----------------------------------------------------


def test_linearized_pinned_f9():
    F9 = Field(3, 1, 2)
    a = F9.from_coeffs([1, 1])  # 1 + i
    assert linearized_is_permutation(F9, 1, a) is True
    ell_inv = linearized_inverse(F9, 1, a)
    assert ell_inv == Poly(F9, [0, 5, 0, 2])  # (2+i) x + 2 x^3
    ell = linearized_poly(F9, 1, a)
    assert ell_inv.compose_mod(ell) == Poly.x(F9)
    assert ell.compose_mod(ell_inv) == Poly.x(F9)
    i = F9.from_coeffs([0, 1])
    assert linearized_is_permutation(F9, 1, i) is False
    with pytest.raises(NotPermutationError):
        linearized_inverse(F9, 1, i)


def test_linearized_m_range():
    F9 = Field(3, 1, 2)
    a = F9.from_coeffs([1, 1])
    with pytest.raises(ValueError):
        linearized_inverse(F9, 2, a)
    with pytest.raises(ValueError):
        linearized_is_permutation(F9, 0, a)
    # extension toggle: m = n degenerates to (1 - a) x
    inv = linearized_inverse(F9, 2, F9(2), allow_m_equal_n=True)
    ell = linearized_poly(F9, 2, F9(2), allow_m_equal_n=True)
    assert ell.compose_mod(inv) == Poly.x(F9)


def test_linearized_sweep_small():
    for spec in [(3, 1, 2), (2, 1, 4), (2, 2, 2), (5, 1, 2)]:
        field = Field(*spec)
        for m in range(1, field.n):
            d = math.gcd(m, field.n)
            ell_mask = norm_mask(field, d, np.arange(1, field.order))
            imgs = linearized_images(field, m, np.arange(1, field.order))
            for ai in range(1, field.order):
                a = field(ai)
                ell = linearized_poly(field, m, a)
                table = PermTable(field, imgs[ai - 1])
                for x in field.elements():
                    assert ell(x) == x ** (field.q ** m) - a * x
                assert table.is_bijection() == bool(ell_mask[ai - 1])
                assert linearized_is_permutation(field, m, a) == bool(ell_mask[ai - 1])
                if ell_mask[ai - 1]:
                    assert linearized_inverse(field, m, a).compose_mod(ell) == Poly.x(field)


# -- gcd identity ------------------------------------------------------------


def test_gcd_halfpower_pinned():
    assert gcd_halfpower(3, 2, 4) == 4
    assert gcd_halfpower(3, 2, 3) == 2
    assert gcd_halfpower(3, 1, 1) == 1


def test_gcd_halfpower_matches_direct_gcd():
    for a in (3, 5, 7, 9):
        for m in range(1, 9):
            for n in range(1, 9):
                assert gcd_halfpower(a, m, n) == math.gcd((a ** m - 1) // 2, a ** n - 1)


def test_gcd_halfpower_rejects_even_base():
    with pytest.raises(ValueError):
        gcd_halfpower(4, 2, 3)
    with pytest.raises(ValueError):
        gcd_halfpower(2, 1, 1)
    with pytest.raises(ValueError):
        gcd_halfpower(3, 0, 1)
