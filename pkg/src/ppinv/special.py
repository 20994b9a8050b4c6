"""Specialised inverses: the t = 2 family and the explicit GF(5^n)/GF(7^n) cases.

Every formula here is a direct transcription of its printed closed form,
including the multinomial coefficient tables, with no delegation to the
general inverse in family.py: the two implementations cross-validate each
other in the test suite.
"""

from __future__ import annotations

import math

from .gf import Field, FieldElement
from .family import NotPermutationError


def multinomial2(i: int, j: int) -> int:
    """Coefficient of x_i x_j in (x_1 + ... + x_l)^2, for i <= j."""
    if i > j:
        raise ValueError("indices must be nondecreasing")
    return 1 if i == j else 2


def multinomial3(i: int, j: int, k: int) -> int:
    """Coefficient of x_i x_j x_k in (x_1 + ... + x_l)^3, for i <= j <= k."""
    if not i <= j <= k:
        raise ValueError("indices must be nondecreasing")
    if i == j == k:
        return 1
    if i == j or j == k:
        return 3
    return 6


def pair_indices(count: int):
    """Nondecreasing index pairs (i, j), 1 <= i <= j <= count, lexicographic."""
    return [(i, j) for i in range(1, count + 1) for j in range(i, count + 1)]


def triple_indices(count: int):
    return [
        (i, j, k)
        for i in range(1, count + 1)
        for j in range(i, count + 1)
        for k in range(j, count + 1)
    ]


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"{num} not divisible by {den}")
    return q


def _unit(field: Field, a) -> FieldElement:
    a = field.element(a)
    if not a:
        raise ValueError("a must be nonzero")
    return a


# ---------------------------------------------------------------------------
# t = 2: f(x) = x^{q^m} - 2a x^{(q^m+1)/2} + a^2 x  =  x (x^{(q^m-1)/2} - a)^2


def h2_sum(field: Field, m: int, a, x) -> FieldElement:
    """Double sum with multinomial2 weights; equals y * h(y)^2 pointwise."""
    a = _unit(field, a)
    x = field.element(x)
    q = field.q
    d = math.gcd(m, field.n)
    qm = q ** m
    ainv = a.inverse()
    acc = field.zero
    for i, j in pair_indices(field.n // d):
        ae = _exact(q ** (i * m) + q ** (j * m) - 2, qm - 1)
        xe = _exact(q ** ((i - 1) * m) + q ** ((j - 1) * m), 2)
        b = field.element(multinomial2(i, j) % field.p)
        acc = acc + (ainv ** ae) * b * (x ** xe)
    return acc


def g2_value(field: Field, m: int, a, x) -> FieldElement:
    """N(a^2) + 1 + 2 N(a) x^{(q^n-1)/2}."""
    a = _unit(field, a)
    x = field.element(x)
    d = math.gcd(m, field.n)
    nu = _exact(field.q ** field.n - 1, field.q ** d - 1)
    n_a = a ** nu
    two = field.one + field.one
    return n_a * n_a + field.one + two * n_a * (x ** ((field.order - 1) // 2))


def t2_inverse(field: Field, m: int, a, x) -> FieldElement:
    """Inverse of x(x^{(q^m-1)/2} - a)^2, branching on the parity of m/d."""
    if field.p == 2:
        raise ValueError("t = 2 form requires odd q")
    if not 1 <= m <= field.n - 1:
        raise ValueError(f"m must lie in [1, {field.n - 1}]")
    a = _unit(field, a)
    x = field.element(x)
    d = math.gcd(m, field.n)
    nu = _exact(field.q ** field.n - 1, field.q ** d - 1)
    n_a = a ** nu
    n_a2 = (a * a) ** nu
    one = field.one
    if (m // d) % 2 == 0:
        if n_a == one:
            raise NotPermutationError("norm of a is 1; f is not a permutation")
        den = one - n_a
        return n_a2 / (den * den) * h2_sum(field, m, a, x)
    if n_a2 == one:
        raise NotPermutationError("norm of a^2 is 1; f is not a permutation")
    den = one - n_a2
    return n_a2 / (den * den) * g2_value(field, m, a, x) * h2_sum(field, m, a, x)


# ---------------------------------------------------------------------------
# GF(5^n): f(x) = x^5 - 2a x^3 + a^2 x  =  x (x^2 - a)^2


def _require_base(field: Field, p: int):
    if field.p != p or field.e != 1:
        raise ValueError(f"form requires a GF({p}^n) field, got GF({field.descriptor()})")


def gf5_s2t2_inverse(field: Field, a, x) -> FieldElement:
    a = _unit(field, a)
    _require_base(field, 5)
    x = field.element(x)
    Q = field.order
    if a ** ((Q - 1) // 2) != -field.one:
        raise NotPermutationError("a is a square; f is not a permutation")
    ainv = a.inverse()
    acc = field.zero
    for i, j in pair_indices(field.n):
        ae = _exact(5 ** i + 5 ** j - 2, 4)
        xe = _exact(5 ** (i - 1) + 5 ** (j - 1), 2)
        acc = acc + (ainv ** ae) * field.element(multinomial2(i, j)) * (x ** xe)
    return field.element(2) * (a ** ((Q - 1) // 4)) * (x ** ((Q - 1) // 2)) * acc


# ---------------------------------------------------------------------------
# GF(7^n): f(x) = x^7 - 2a x^4 + a^2 x  =  x (x^3 - a)^2


def gf7_s3t2_inverse(field: Field, a, x) -> FieldElement:
    a = _unit(field, a)
    _require_base(field, 7)
    x = field.element(x)
    Q = field.order
    if a ** ((Q - 1) // 3) == field.one:
        raise NotPermutationError("a is a cube; f is not a permutation")
    ainv = a.inverse()
    pref = field.element(4) * (a ** ((Q - 1) // 6)) * (x ** ((Q - 1) // 2)) - field.element(2) * (
        ainv ** ((Q - 1) // 3)
    )
    acc = field.zero
    for i, j in pair_indices(field.n):
        ae = _exact(7 ** i + 7 ** j - 2, 6)
        xe = _exact(7 ** (i - 1) + 7 ** (j - 1), 2)
        acc = acc + field.element(multinomial2(i, j)) * (ainv ** ae) * (x ** xe)
    return pref * acc


# ---------------------------------------------------------------------------
# GF(7^n): f(x) = x^7 - 3a x^5 + 3a^2 x^3 - a^3 x  =  x (x^2 - a)^3


def h3_sum(field: Field, a, x) -> FieldElement:
    """Triple sum with multinomial3 weights; equals y * h(y)^3 pointwise."""
    a = _unit(field, a)
    _require_base(field, 7)
    x = field.element(x)
    ainv = a.inverse()
    acc = field.zero
    for i, j, k in triple_indices(field.n):
        ae = _exact(7 ** i + 7 ** j + 7 ** k - 3, 6)
        xe = _exact(7 ** (i - 1) + 7 ** (j - 1) + 7 ** (k - 1), 3)
        acc = acc + (ainv ** ae) * field.element(multinomial3(i, j, k)) * (x ** xe)
    return acc


def gf7_s2t3_inverse(field: Field, a, x) -> FieldElement:
    a = _unit(field, a)
    _require_base(field, 7)
    x = field.element(x)
    Q = field.order
    if a ** ((Q - 1) // 2) != -field.one:
        raise NotPermutationError("a is a square; f is not a permutation")
    three = field.element(3)
    two = field.element(2)
    x4 = x ** 4
    pref = three * ((a * x4) ** ((Q - 1) // 6)) - three * ((a * x) ** ((Q - 1) // 3)) - two
    return pref * h3_sum(field, a, x)


# ---------------------------------------------------------------------------
# routing for the CLI and the survey


def route_special(field: Field, m: int, s: int, t: int) -> str | None:
    """Name of the applicable specialised form, or None for the general path."""
    if field.p == 5 and field.e == 1 and (m, s, t) == (1, 2, 2):
        return "cor3"
    if field.p == 7 and field.e == 1 and (m, s, t) == (1, 3, 2):
        return "cor4"
    if field.p == 7 and field.e == 1 and (m, s, t) == (1, 2, 3):
        return "cor5"
    if t == 2 and field.p != 2 and 1 <= m <= field.n - 1:
        return "thm31"
    return None


def evaluate_special(name: str, field: Field, m: int, a, x) -> FieldElement:
    if name == "cor3":
        return gf5_s2t2_inverse(field, a, x)
    if name == "cor4":
        return gf7_s3t2_inverse(field, a, x)
    if name == "cor5":
        return gf7_s2t3_inverse(field, a, x)
    if name == "thm31":
        return t2_inverse(field, m, a, x)
    raise ValueError(f"unknown specialised form {name!r}")
